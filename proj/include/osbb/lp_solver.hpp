#pragma once

#include <vector>

#include "osbb/lp_model.hpp"

namespace osbb {

enum class BoundSide : std::uint8_t { kLower, kUpper };

// Dual simplex over bounded variables with an explicitly maintained basis
// inverse. One instance owns mutable working state (bounds, basis) for a
// single model, which makes repeated solves after bound changes cheap:
// changing bounds never disturbs dual feasibility, so the previous optimal
// basis is a hot start for the next solve.
//
// Instances are independent; the model itself may be shared read-only.
class DualSimplex {
 public:
  explicit DualSimplex(const LpModel& model);

  // Working bounds for the structural variables (must be within +-inf and
  // pairwise consistent). Resets any artificial bounds.
  void set_bounds(const std::vector<double>& lower,
                  const std::vector<double>& upper);
  void change_bound(int var, BoundSide side, double value);

  void set_basis(const Basis& basis);  // falls back to all-slack if unusable
  void reset_basis();                  // all-slack start

  // Runs the dual simplex from the current basis. iteration_cap < 0 uses the
  // safeguard cap 100 * (rows + vars). Throws Error if the LP is unbounded
  // (possible only with unboxed variables and matching costs).
  LpOutcome solve(int iteration_cap = -1);

  int default_iteration_cap() const { return 100 * (m_ + n_); }
  const std::vector<double>& working_lower() const { return lb_; }
  const std::vector<double>& working_upper() const { return ub_; }

 private:
  // columns 0..n-1 are structural, n..n+m-1 the slack of each row
  bool is_slack(int col) const { return col >= n_; }
  double nonbasic_value(int col) const;
  double binv(int i, int k) const { return binv_[i * m_ + k]; }
  double& binv(int i, int k) { return binv_[i * m_ + k]; }

  bool refactor();                // rebuild binv_ from basic_; false if singular
  void ensure_valid_basis();
  void compute_duals();           // y_, d_ from current basis
  void compute_primals();         // xb_
  void repair_dual_feasibility();
  int pick_leaving(double* delta) const;      // -1 if primal feasible
  int ratio_test(int leave_row, double delta); // fills alpha_, -1 if no candidate
  void pivot(int leave_row, int enter_col, double delta);
  bool resolve_artificial_bounds();           // true if a bound was widened
  LpOutcome finalize_optimal(int iterations);
  bool certificate_blocked_by_artificials(const std::vector<double>& w) const;
  LpOutcome finalize_infeasible(int leave_row, double delta, int iterations,
                                bool* retry);
  LpOutcome finalize_iteration_limit(int iterations);
  Basis snapshot_basis() const;
  double current_objective() const;

  const LpModel* model_;
  int n_ = 0, m_ = 0, total_ = 0;
  std::vector<std::vector<std::pair<int, double>>> cols_;  // (row, coef) per column
  std::vector<double> cost_;   // size total_
  std::vector<double> rhs_;    // size m_

  std::vector<double> lb_, ub_;          // working bounds, size total_
  std::vector<bool> art_lb_, art_ub_;    // artificial-bound markers
  std::vector<VarStatus> status_;        // size total_
  std::vector<int> basic_;               // column basic in each row position
  std::vector<double> binv_;             // m_ x m_ basis inverse
  std::vector<double> xb_;               // basic values, aligned with basic_
  std::vector<double> y_;                // row duals
  std::vector<double> d_;                // reduced costs per column
  std::vector<double> alpha_;            // pivot-row coefficients, per column

  bool bland_ = false;
  int stall_ = 0;
  int since_refactor_ = 0;
  int art_rounds_ = 0;
  bool fresh_factor_ = false;
};

// The changed bound passed to hotstart_solve.
struct BoundChangeSpec {
  int var = -1;
  BoundSide side = BoundSide::kLower;
  double value = 0.0;
};

// One-shot solve from the all-slack basis.
LpOutcome solve_from_scratch(const LpModel& model,
                             const std::vector<double>& lower,
                             const std::vector<double>& upper,
                             int iteration_cap = -1);

// Solve after a single bound change, starting from a basis that was dual
// feasible for the prior bounds (any optimal basis qualifies).
LpOutcome hotstart_solve(const LpModel& model, const Basis& basis,
                         const std::vector<double>& lower,
                         const std::vector<double>& upper,
                         const BoundChangeSpec& change,
                         int iteration_cap = -1);

}  // namespace osbb
