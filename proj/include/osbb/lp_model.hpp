#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "osbb/common.hpp"

namespace osbb {

// One constraint in the normalized form  sum coef_i * x_i >= rhs.
struct SparseRow {
  std::vector<std::pair<int, double>> coef;  // (var index, value), index-sorted
  double rhs = 0.0;
};

// LP data in the form the simplex works on: minimization, all rows >=,
// box bounds per variable (+-inf allowed).
struct LpModel {
  int num_vars = 0;
  std::vector<double> cost;        // size num_vars
  double cost_offset = 0.0;        // added to every reported objective
  std::vector<SparseRow> rows;
  std::vector<double> lower;       // global bounds, size num_vars
  std::vector<double> upper;

  int num_rows() const { return static_cast<int>(rows.size()); }

  // Throws Error on inconsistent dimensions, NaN coefficients, or a finite
  // lower bound above the upper bound.
  void check() const;
};

enum class LpStatus : std::uint8_t {
  kOptimal,
  kInfeasible,                  // proven via a Farkas-type certificate
  kDualUnboundedInfeasible,     // dual diverged without a clean certificate
  kIterationLimit,
};

inline bool lp_infeasible(LpStatus s) {
  return s == LpStatus::kInfeasible || s == LpStatus::kDualUnboundedInfeasible;
}

const char* to_string(LpStatus s);

enum class VarStatus : std::uint8_t { kBasic, kAtLower, kAtUpper, kFree };

// Snapshot of a simplex basis: statuses for structural variables and for the
// slack of each internal (normalized) row.
struct Basis {
  std::vector<VarStatus> structural;
  std::vector<VarStatus> logical;

  bool empty() const { return structural.empty() && logical.empty(); }
  int basic_count() const;
};

// Result of one LP solve.
//
// dual_info is the per-structural-variable vector r used by the search:
// reduced costs when the solve ended optimal (or at the iteration limit),
// Farkas certificate weights when it ended infeasible. In the infeasible
// case the row ray y (>= 0 on the normalized rows) satisfies r = -(y^T A)
// and the implied inequality is strictly violated over the bound box.
struct LpOutcome {
  LpStatus status = LpStatus::kIterationLimit;
  double objective = kInf;          // optimum; dual bound at iteration limit
  std::vector<double> primal;       // structural values (optimal only)
  std::vector<double> dual_info;    // r, size num_vars
  std::vector<double> row_duals;    // y per internal row
  Basis basis;
  int iterations = 0;
  bool has_certificate = false;     // infeasible with a validated ray

  // Weak-duality evaluation of this outcome's dual solution at an arbitrary
  // bound box: y.rhs + sum_{r>0} r*lb + sum_{r<0} r*ub (+ cost offset).
  // Valid lower bound on the LP optimum over that box.
  double dual_bound_for_box(const LpModel& model,
                            const std::vector<double>& box_lower,
                            const std::vector<double>& box_upper) const;
};

// Returns outcome.dual_info after checking the status carries one.
// Throws ContractViolation for iteration-limit outcomes.
const std::vector<double>& extract_dual_info(const LpOutcome& outcome);

}  // namespace osbb
