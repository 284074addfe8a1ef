#pragma once

#include "osbb/problem.hpp"

namespace osbb {

// Knobs for the random instance generator.
struct GeneratorProfile {
  double density = 0.7;            // probability of a nonzero row coefficient
  int coef_min = -9, coef_max = 9; // integer coefficient range (0 excluded)
  double continuous_fraction = 0;  // fraction of variables left continuous
  // When set, the rhs values are anchored at a random integral point, which
  // makes the instance feasible by construction.
  bool ensure_feasible = true;
  int rhs_slack_max = 2;           // anchored rows get this much slack at most
};

// Reproducible random instance: n_vars box-bounded variables (integer ones
// binary, continuous ones in [0, 10]) and n_rows inequality rows.
MilpProblem generate_random(std::uint64_t seed, int n_vars, int n_rows,
                            const GeneratorProfile& profile = {});

}  // namespace osbb
