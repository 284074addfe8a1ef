#pragma once

#include <cmath>
#include <string>

namespace osbb {

enum class NodeAction : std::uint8_t { kRoot, kDive, kTop };
enum class NodeOutcome : std::uint8_t { kFractional, kIntegral, kInfeasible, kCutoff };

// One record per LP-processed node, in processing order.
struct SearchEvent {
  long node = 0;               // 1-based LP-processed node id
  NodeAction action = NodeAction::kRoot;
  int offshoot_id = -1;        // offshoot this node belongs to / created, -1 if none
  int parent_offshoot_id = -1; // offshoot branched from (top actions)
  NodeOutcome outcome = NodeOutcome::kFractional;
  double objective = std::numeric_limits<double>::quiet_NaN();
};

inline const char* to_string(NodeAction a) {
  switch (a) {
    case NodeAction::kRoot: return "root";
    case NodeAction::kDive: return "dive";
    case NodeAction::kTop: return "top";
  }
  return "?";
}

inline const char* to_string(NodeOutcome s) {
  switch (s) {
    case NodeOutcome::kFractional: return "fractional";
    case NodeOutcome::kIntegral: return "integral";
    case NodeOutcome::kInfeasible: return "infeasible";
    case NodeOutcome::kCutoff: return "cutoff";
  }
  return "?";
}

// Compact JSONL form used by --trace.
std::string event_to_json(const SearchEvent& e);

}  // namespace osbb
