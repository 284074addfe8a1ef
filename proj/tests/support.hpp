#pragma once

#include <vector>

#include "osbb/problem.hpp"

namespace osbb::testing {

// min x1 - 2 x2 - 6 x3 over four >= rows with binary variables. Depth-first
// enumeration of this instance visits every leaf, which makes it the standard
// worst-case fixture throughout the tests. Optimum -2 at (0, 1, 0).
inline MilpProblem example1_problem() {
  MilpProblem p;
  p.name = "example1";
  p.var_names = {"x1", "x2", "x3"};
  p.objective = {1.0, -2.0, -6.0};
  p.lower = {0.0, 0.0, 0.0};
  p.upper = {1.0, 1.0, 1.0};
  p.integral = {true, true, true};
  p.rows = {
      {{{0, -3.0}, {1, -4.0}, {2, -2.0}}, RowSense::kGe, -8.0},
      {{{0, 3.0}, {1, -4.0}, {2, -2.0}}, RowSense::kGe, -5.0},
      {{{0, -3.0}, {1, 4.0}, {2, -2.0}}, RowSense::kGe, -4.0},
      {{{0, 3.0}, {1, 4.0}, {2, -2.0}}, RowSense::kGe, -1.0},
  };
  return p;
}

// Three binaries with the single packing row x1 + x2 <= 1; the x3 column does
// not appear in any row, so infeasibility proofs never involve it.
inline MilpProblem packing_pair_problem() {
  MilpProblem p;
  p.name = "packing-pair";
  p.var_names = {"x1", "x2", "x3"};
  p.objective = {0.0, 0.0, 0.0};
  p.lower = {0.0, 0.0, 0.0};
  p.upper = {1.0, 1.0, 1.0};
  p.integral = {true, true, true};
  p.rows = {
      {{{0, 1.0}, {1, 1.0}}, RowSense::kLe, 1.0},
  };
  return p;
}

inline std::vector<double> box_lower(const MilpProblem& p) { return p.lower; }
inline std::vector<double> box_upper(const MilpProblem& p) { return p.upper; }

}  // namespace osbb::testing
