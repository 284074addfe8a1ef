#pragma once

#include <string>
#include <vector>

#include "osbb/lp_model.hpp"

namespace osbb {

enum class RowSense : std::uint8_t { kLe, kGe, kEq };

const char* to_string(RowSense s);

struct ProblemRow {
  std::vector<std::pair<int, double>> coef;  // (var index, value), index-sorted
  RowSense sense = RowSense::kGe;
  double rhs = 0.0;

  bool operator==(const ProblemRow&) const = default;
};

// A mixed-integer instance. Stored in minimization form; inputs declared as
// maximization are negated at parse time and flagged in converted_from_max.
struct MilpProblem {
  std::string name;
  std::vector<std::string> var_names;
  std::vector<double> objective;
  double objective_offset = 0.0;
  std::vector<double> lower, upper;
  std::vector<bool> integral;
  std::vector<ProblemRow> rows;
  bool converted_from_max = false;

  int num_vars() const { return static_cast<int>(objective.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }
  bool pure_integer() const;
  bool has_unbounded_integer() const;

  // Throws Error on NaN/inf coefficients, crossed bounds, duplicate names,
  // or out-of-range indices.
  void validate() const;

  // Normalized LP relaxation: minimization, every row as >=.
  LpModel to_lp() const;

  bool operator==(const MilpProblem&) const = default;
};

}  // namespace osbb
