#pragma once

#include <string>
#include <vector>

namespace osbb {

// One solver run, serializable for the comparison harness. `config` is the
// canonical flag fingerprint; `label` a short display name for CSV columns.
struct RunRecord {
  std::string instance;
  std::string config;
  std::string label;
  std::string status;  // optimal | infeasible | limit | error
  double objective = 0.0;  // NaN unless a feasible objective exists
  long nodes = 0;
  long offshoots = 0;
  long lp_iterations = 0;
  double wall_time_sec = 0.0;

  bool solved() const { return status == "optimal" || status == "infeasible"; }
};

std::string records_to_json(const std::vector<RunRecord>& records);
std::vector<RunRecord> records_from_json(const std::string& text);

}  // namespace osbb
