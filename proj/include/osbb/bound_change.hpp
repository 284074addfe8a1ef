#pragma once

#include <cmath>
#include <vector>

#include "osbb/lp_solver.hpp"

namespace osbb {

// One branching decision: raise a lower bound or push down an upper bound.
struct BoundChange {
  int var = -1;
  BoundSide side = BoundSide::kLower;
  double value = 0.0;            // the new bound b
  double frac_at_branch = 0.0;   // LP value fraction of var when created
  double node_objective = std::numeric_limits<double>::quiet_NaN();
  int chrono = 0;                // position in the original dive
  bool processed = false;

  bool operator==(const BoundChange&) const = default;
};

// The opposite branch of an integer bound change: x >= b becomes x <= b-1,
// x <= b becomes x >= b+1.
inline BoundChange flipped(const BoundChange& c) {
  BoundChange f = c;
  f.node_objective = std::numeric_limits<double>::quiet_NaN();
  f.processed = false;
  if (c.side == BoundSide::kLower) {
    f.side = BoundSide::kUpper;
    f.value = c.value - 1.0;
  } else {
    f.side = BoundSide::kLower;
    f.value = c.value + 1.0;
  }
  return f;
}

// Tightening application; repeated changes keep the strongest bound.
inline void apply_change(const BoundChange& c, std::vector<double>& lower,
                         std::vector<double>& upper) {
  if (c.side == BoundSide::kLower) {
    if (c.value > lower[c.var]) lower[c.var] = c.value;
  } else {
    if (c.value < upper[c.var]) upper[c.var] = c.value;
  }
}

inline void apply_changes(const std::vector<BoundChange>& changes,
                          std::vector<double>& lower,
                          std::vector<double>& upper) {
  for (const BoundChange& c : changes) apply_change(c, lower, upper);
}

}  // namespace osbb
