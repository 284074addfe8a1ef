#include "osbb/lp_solver.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace osbb {

namespace {
constexpr double kArtificialMagnitude = 1e7;
constexpr int kRefactorInterval = 40;
constexpr int kStallLimit = 50;  // degenerate pivots before Bland's rule kicks in
constexpr int kMaxArtificialRounds = 4;
}  // namespace

// ---------------------------------------------------------------------------
// LpModel / Basis / LpOutcome

void LpModel::check() const {
  if (static_cast<int>(cost.size()) != num_vars ||
      static_cast<int>(lower.size()) != num_vars ||
      static_cast<int>(upper.size()) != num_vars) {
    throw Error("LpModel: vector sizes inconsistent with num_vars");
  }
  for (int i = 0; i < num_vars; ++i) {
    if (std::isnan(cost[i])) throw Error("LpModel: NaN objective coefficient");
    if (std::isnan(lower[i]) || std::isnan(upper[i]))
      throw Error("LpModel: NaN bound");
    if (lower[i] > upper[i] + tol::kZero)
      throw Error("LpModel: lower bound above upper bound on variable " +
                  std::to_string(i));
  }
  for (const SparseRow& row : rows) {
    if (std::isnan(row.rhs) || std::isinf(row.rhs))
      throw Error("LpModel: non-finite row rhs");
    for (auto [j, a] : row.coef) {
      if (j < 0 || j >= num_vars) throw Error("LpModel: column index out of range");
      if (std::isnan(a) || std::isinf(a))
        throw Error("LpModel: non-finite row coefficient");
    }
  }
}

int Basis::basic_count() const {
  auto count = [](const std::vector<VarStatus>& v) {
    return static_cast<int>(std::count(v.begin(), v.end(), VarStatus::kBasic));
  };
  return count(structural) + count(logical);
}

const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kDualUnboundedInfeasible: return "dual-unbounded-infeasible";
    case LpStatus::kIterationLimit: return "iteration-limit";
  }
  return "?";
}

double LpOutcome::dual_bound_for_box(const LpModel& model,
                                     const std::vector<double>& box_lower,
                                     const std::vector<double>& box_upper) const {
  double v = model.cost_offset;
  for (int k = 0; k < model.num_rows(); ++k) v += row_duals[k] * model.rows[k].rhs;
  for (int i = 0; i < model.num_vars; ++i) {
    double r = dual_info[i];
    if (r > tol::kZero) {
      v += r * box_lower[i];
    } else if (r < -tol::kZero) {
      v += r * box_upper[i];
    }
  }
  return v;
}

const std::vector<double>& extract_dual_info(const LpOutcome& outcome) {
  if (outcome.status == LpStatus::kIterationLimit)
    throw ContractViolation("dual information undefined for iteration-limit outcome");
  if (lp_infeasible(outcome.status) && !outcome.has_certificate)
    throw Error("infeasible outcome carries no usable certificate");
  return outcome.dual_info;
}

// ---------------------------------------------------------------------------
// DualSimplex

DualSimplex::DualSimplex(const LpModel& model) : model_(&model) {
  model.check();
  n_ = model.num_vars;
  m_ = model.num_rows();
  total_ = n_ + m_;
  cols_.assign(total_, {});
  cost_.assign(total_, 0.0);
  rhs_.assign(m_, 0.0);
  for (int i = 0; i < n_; ++i) cost_[i] = model.cost[i];
  for (int k = 0; k < m_; ++k) {
    rhs_[k] = model.rows[k].rhs;
    for (auto [j, a] : model.rows[k].coef) cols_[j].push_back({k, a});
    cols_[n_ + k].push_back({k, -1.0});  // a.x - s = rhs, s >= 0
  }
  lb_.assign(total_, 0.0);
  ub_.assign(total_, kInf);
  for (int i = 0; i < n_; ++i) {
    lb_[i] = model.lower[i];
    ub_[i] = model.upper[i];
  }
  art_lb_.assign(total_, false);
  art_ub_.assign(total_, false);
  status_.assign(total_, VarStatus::kAtLower);
  basic_.assign(m_, 0);
  binv_.assign(static_cast<size_t>(m_) * m_, 0.0);
  xb_.assign(m_, 0.0);
  y_.assign(m_, 0.0);
  d_.assign(total_, 0.0);
  alpha_.assign(total_, 0.0);
  reset_basis();
}

void DualSimplex::set_bounds(const std::vector<double>& lower,
                             const std::vector<double>& upper) {
  if (static_cast<int>(lower.size()) != n_ || static_cast<int>(upper.size()) != n_)
    throw ContractViolation("set_bounds: size mismatch");
  for (int i = 0; i < n_; ++i) {
    if (lower[i] > upper[i] + tol::kZero)
      throw ContractViolation("set_bounds: crossing bounds on variable " +
                              std::to_string(i));
    lb_[i] = lower[i];
    ub_[i] = upper[i];
    art_lb_[i] = art_ub_[i] = false;
  }
  for (int k = 0; k < m_; ++k) {
    lb_[n_ + k] = 0.0;
    ub_[n_ + k] = kInf;
    art_lb_[n_ + k] = art_ub_[n_ + k] = false;
  }
  // nonbasic statuses must reference an existing bound
  for (int j = 0; j < total_; ++j) {
    if (status_[j] == VarStatus::kBasic) continue;
    if (status_[j] == VarStatus::kAtLower && lb_[j] == -kInf)
      status_[j] = ub_[j] < kInf ? VarStatus::kAtUpper : VarStatus::kFree;
    else if (status_[j] == VarStatus::kAtUpper && ub_[j] == kInf)
      status_[j] = lb_[j] > -kInf ? VarStatus::kAtLower : VarStatus::kFree;
  }
}

void DualSimplex::change_bound(int var, BoundSide side, double value) {
  if (var < 0 || var >= n_) throw ContractViolation("change_bound: bad variable");
  double lo = side == BoundSide::kLower ? value : lb_[var];
  double hi = side == BoundSide::kUpper ? value : ub_[var];
  if (lo > hi + tol::kZero)
    throw ContractViolation("change_bound: crossing bounds on variable " +
                            std::to_string(var));
  lb_[var] = lo;
  ub_[var] = hi;
  if (side == BoundSide::kLower) art_lb_[var] = false;
  else art_ub_[var] = false;
  if (status_[var] != VarStatus::kBasic) {
    if (status_[var] == VarStatus::kAtLower && lb_[var] == -kInf)
      status_[var] = ub_[var] < kInf ? VarStatus::kAtUpper : VarStatus::kFree;
    else if (status_[var] == VarStatus::kAtUpper && ub_[var] == kInf)
      status_[var] = lb_[var] > -kInf ? VarStatus::kAtLower : VarStatus::kFree;
  }
}

void DualSimplex::reset_basis() {
  for (int i = 0; i < n_; ++i) {
    if (lb_[i] > -kInf) status_[i] = VarStatus::kAtLower;
    else if (ub_[i] < kInf) status_[i] = VarStatus::kAtUpper;
    else status_[i] = VarStatus::kFree;
  }
  for (int k = 0; k < m_; ++k) {
    status_[n_ + k] = VarStatus::kBasic;
    basic_[k] = n_ + k;
  }
  fresh_factor_ = false;
}

void DualSimplex::set_basis(const Basis& basis) {
  if (static_cast<int>(basis.structural.size()) != n_ ||
      static_cast<int>(basis.logical.size()) != m_ ||
      basis.basic_count() != m_) {
    reset_basis();
    return;
  }
  for (int i = 0; i < n_; ++i) status_[i] = basis.structural[i];
  for (int k = 0; k < m_; ++k) status_[n_ + k] = basis.logical[k];
  for (int j = 0; j < total_; ++j) {
    if (status_[j] == VarStatus::kBasic) continue;
    if (status_[j] == VarStatus::kAtLower && lb_[j] == -kInf)
      status_[j] = ub_[j] < kInf ? VarStatus::kAtUpper : VarStatus::kFree;
    else if (status_[j] == VarStatus::kAtUpper && ub_[j] == kInf)
      status_[j] = lb_[j] > -kInf ? VarStatus::kAtLower : VarStatus::kFree;
    else if (status_[j] == VarStatus::kFree && lb_[j] == ub_[j])
      status_[j] = VarStatus::kAtLower;
  }
  fresh_factor_ = false;
}

void DualSimplex::ensure_valid_basis() {
  int count = 0;
  for (int j = 0; j < total_; ++j)
    if (status_[j] == VarStatus::kBasic) ++count;
  if (count != m_) {
    reset_basis();
    return;
  }
  int pos = 0;
  for (int j = 0; j < total_; ++j)
    if (status_[j] == VarStatus::kBasic) basic_[pos++] = j;
}

double DualSimplex::nonbasic_value(int col) const {
  switch (status_[col]) {
    case VarStatus::kAtLower: return lb_[col];
    case VarStatus::kAtUpper: return ub_[col];
    case VarStatus::kFree: return 0.0;
    case VarStatus::kBasic: break;
  }
  return 0.0;
}

bool DualSimplex::refactor() {
  if (m_ == 0) return true;
  std::vector<double> a(static_cast<size_t>(m_) * m_, 0.0);
  for (int i = 0; i < m_; ++i)
    for (auto [k, v] : cols_[basic_[i]]) a[static_cast<size_t>(k) * m_ + i] = v;
  std::vector<double> inv(static_cast<size_t>(m_) * m_, 0.0);
  for (int i = 0; i < m_; ++i) inv[static_cast<size_t>(i) * m_ + i] = 1.0;
  auto arow = [&](int i) { return &a[static_cast<size_t>(i) * m_]; };
  auto irow = [&](int i) { return &inv[static_cast<size_t>(i) * m_]; };
  for (int col = 0; col < m_; ++col) {
    int piv = -1;
    double best = 1e-11;
    for (int row = col; row < m_; ++row) {
      double v = std::fabs(arow(row)[col]);
      if (v > best) {
        best = v;
        piv = row;
      }
    }
    if (piv < 0) return false;
    if (piv != col) {
      std::swap_ranges(arow(piv), arow(piv) + m_, arow(col));
      std::swap_ranges(irow(piv), irow(piv) + m_, irow(col));
    }
    double p = 1.0 / arow(col)[col];
    for (int k = 0; k < m_; ++k) {
      arow(col)[k] *= p;
      irow(col)[k] *= p;
    }
    for (int row = 0; row < m_; ++row) {
      if (row == col) continue;
      double f = arow(row)[col];
      if (f == 0.0) continue;
      for (int k = 0; k < m_; ++k) {
        arow(row)[k] -= f * arow(col)[k];
        irow(row)[k] -= f * irow(col)[k];
      }
    }
  }
  binv_ = std::move(inv);
  return true;
}

void DualSimplex::compute_duals() {
  for (int k = 0; k < m_; ++k) {
    double v = 0.0;
    for (int i = 0; i < m_; ++i) {
      double c = cost_[basic_[i]];
      if (c != 0.0) v += c * binv(i, k);
    }
    y_[k] = v;
  }
  for (int j = 0; j < total_; ++j) {
    if (status_[j] == VarStatus::kBasic) {
      d_[j] = 0.0;
      continue;
    }
    double v = cost_[j];
    for (auto [k, a] : cols_[j]) v -= y_[k] * a;
    d_[j] = v;
  }
}

void DualSimplex::compute_primals() {
  if (m_ == 0) return;
  std::vector<double> r = rhs_;
  for (int j = 0; j < total_; ++j) {
    if (status_[j] == VarStatus::kBasic) continue;
    double v = nonbasic_value(j);
    if (v == 0.0) continue;
    for (auto [k, a] : cols_[j]) r[k] -= a * v;
  }
  for (int i = 0; i < m_; ++i) {
    double v = 0.0;
    for (int k = 0; k < m_; ++k) v += binv(i, k) * r[k];
    xb_[i] = v;
  }
}

void DualSimplex::repair_dual_feasibility() {
  for (int j = 0; j < total_; ++j) {
    if (status_[j] == VarStatus::kBasic) continue;
    if (lb_[j] == ub_[j]) continue;  // fixed: any reduced-cost sign is fine
    double dj = d_[j];
    switch (status_[j]) {
      case VarStatus::kAtLower:
        if (dj < -tol::kDual) {
          if (ub_[j] == kInf) {
            ub_[j] = kArtificialMagnitude;
            art_ub_[j] = true;
          }
          status_[j] = VarStatus::kAtUpper;
        }
        break;
      case VarStatus::kAtUpper:
        if (dj > tol::kDual) {
          if (lb_[j] == -kInf) {
            lb_[j] = -kArtificialMagnitude;
            art_lb_[j] = true;
          }
          status_[j] = VarStatus::kAtLower;
        }
        break;
      case VarStatus::kFree:
        if (dj > tol::kDual) {
          lb_[j] = -kArtificialMagnitude;
          art_lb_[j] = true;
          status_[j] = VarStatus::kAtLower;
        } else if (dj < -tol::kDual) {
          ub_[j] = kArtificialMagnitude;
          art_ub_[j] = true;
          status_[j] = VarStatus::kAtUpper;
        }
        break;
      case VarStatus::kBasic:
        break;
    }
  }
}

int DualSimplex::pick_leaving(double* delta) const {
  int best = -1;
  double best_viol = tol::kFeas;
  double bd = 0.0;
  for (int i = 0; i < m_; ++i) {
    int col = basic_[i];
    double v = xb_[i];
    double viol_low = lb_[col] - v;
    double viol_up = v - ub_[col];
    if (bland_) {
      if ((viol_low > tol::kFeas || viol_up > tol::kFeas) &&
          (best < 0 || col < basic_[best])) {
        best = i;
        bd = viol_low > viol_up ? 1.0 : -1.0;
      }
    } else {
      if (viol_low > best_viol) {
        best = i;
        best_viol = viol_low;
        bd = 1.0;
      }
      if (viol_up > best_viol) {
        best = i;
        best_viol = viol_up;
        bd = -1.0;
      }
    }
  }
  *delta = bd;
  return best;
}

int DualSimplex::ratio_test(int leave_row, double delta) {
  const double* rho = &binv_[static_cast<size_t>(leave_row) * m_];
  for (int j = 0; j < total_; ++j) {
    if (status_[j] == VarStatus::kBasic) {
      alpha_[j] = 0.0;
      continue;
    }
    double v = 0.0;
    for (auto [k, a] : cols_[j]) v += rho[k] * a;
    alpha_[j] = v;
  }
  auto eligible = [&](int j) {
    if (status_[j] == VarStatus::kBasic) return false;
    if (lb_[j] == ub_[j]) return false;
    double a = alpha_[j];
    switch (status_[j]) {
      case VarStatus::kAtLower: return delta > 0 ? a < -tol::kZero : a > tol::kZero;
      case VarStatus::kAtUpper: return delta > 0 ? a > tol::kZero : a < -tol::kZero;
      case VarStatus::kFree: return std::fabs(a) > tol::kZero;
      case VarStatus::kBasic: break;
    }
    return false;
  };
  int q = -1;
  double best_ratio = -kInf;
  double best_alpha = 0.0;
  for (int j = 0; j < total_; ++j) {
    if (!eligible(j)) continue;
    double ratio = delta * d_[j] / alpha_[j];
    if (ratio > 0.0) ratio = 0.0;  // clamp reduced-cost noise
    if (q < 0 || ratio > best_ratio + 1e-12 ||
        (ratio > best_ratio - 1e-12 &&
         std::fabs(alpha_[j]) > std::fabs(best_alpha))) {
      q = j;
      best_ratio = ratio;
      best_alpha = alpha_[j];
    }
  }
  if (bland_ && q >= 0) {
    for (int j = 0; j < total_; ++j) {
      if (!eligible(j)) continue;
      double ratio = delta * d_[j] / alpha_[j];
      if (ratio > 0.0) ratio = 0.0;
      if (ratio >= best_ratio - 1e-9) return j;
    }
  }
  return q;
}

void DualSimplex::pivot(int leave_row, int enter_col, double delta) {
  int p = basic_[leave_row];
  double aq = alpha_[enter_col];
  double mu = d_[enter_col] / aq;
  for (int j = 0; j < total_; ++j) {
    if (status_[j] == VarStatus::kBasic) continue;
    if (alpha_[j] != 0.0) d_[j] -= mu * alpha_[j];
  }
  d_[p] = -mu;
  d_[enter_col] = 0.0;

  std::vector<double> h(m_, 0.0);
  for (auto [k, a] : cols_[enter_col])
    for (int i = 0; i < m_; ++i) h[i] += binv(i, k) * a;
  double hr = h[leave_row];
  for (int i = 0; i < m_; ++i) {
    if (i == leave_row) continue;
    double f = h[i] / hr;
    if (f == 0.0) continue;
    for (int k = 0; k < m_; ++k) binv(i, k) -= f * binv(leave_row, k);
  }
  double inv = 1.0 / hr;
  for (int k = 0; k < m_; ++k) binv(leave_row, k) *= inv;

  status_[enter_col] = VarStatus::kBasic;
  status_[p] = delta > 0 ? VarStatus::kAtLower : VarStatus::kAtUpper;
  basic_[leave_row] = enter_col;
}

bool DualSimplex::resolve_artificial_bounds() {
  bool widened = false;
  for (int j = 0; j < total_; ++j) {
    if (status_[j] == VarStatus::kAtLower && art_lb_[j] &&
        std::fabs(d_[j]) > tol::kDual) {
      lb_[j] *= 1024.0;
      widened = true;
    } else if (status_[j] == VarStatus::kAtUpper && art_ub_[j] &&
               std::fabs(d_[j]) > tol::kDual) {
      ub_[j] *= 1024.0;
      widened = true;
    }
  }
  if (widened && ++art_rounds_ > kMaxArtificialRounds)
    throw Error("LP appears unbounded: artificial bound active at optimum");
  return widened;
}

Basis DualSimplex::snapshot_basis() const {
  Basis b;
  b.structural.assign(status_.begin(), status_.begin() + n_);
  b.logical.assign(status_.begin() + n_, status_.end());
  return b;
}

double DualSimplex::current_objective() const {
  double v = model_->cost_offset;
  for (int i = 0; i < m_; ++i) {
    double c = cost_[basic_[i]];
    if (c != 0.0) v += c * xb_[i];
  }
  for (int j = 0; j < n_; ++j) {
    if (status_[j] == VarStatus::kBasic) continue;
    if (cost_[j] != 0.0) v += cost_[j] * nonbasic_value(j);
  }
  return v;
}

LpOutcome DualSimplex::finalize_optimal(int iterations) {
  LpOutcome out;
  out.status = LpStatus::kOptimal;
  out.iterations = iterations;
  out.primal.assign(n_, 0.0);
  for (int j = 0; j < n_; ++j)
    if (status_[j] != VarStatus::kBasic) out.primal[j] = nonbasic_value(j);
  for (int i = 0; i < m_; ++i)
    if (basic_[i] < n_) out.primal[basic_[i]] = xb_[i];
  out.objective = model_->cost_offset;
  for (int j = 0; j < n_; ++j) out.objective += cost_[j] * out.primal[j];
  out.dual_info.assign(d_.begin(), d_.begin() + n_);
  out.row_duals = y_;
  out.basis = snapshot_basis();
  return out;
}

bool DualSimplex::certificate_blocked_by_artificials(
    const std::vector<double>& w) const {
  for (int j = 0; j < total_; ++j) {
    if (w[j] > tol::kZero && art_lb_[j]) return true;
    if (w[j] < -tol::kZero && art_ub_[j]) return true;
  }
  return false;
}

LpOutcome DualSimplex::finalize_infeasible(int leave_row, double delta,
                                           int iterations, bool* retry) {
  *retry = false;
  int p = basic_[leave_row];
  std::vector<double> w(total_, 0.0);
  for (int j = 0; j < total_; ++j)
    w[j] = status_[j] == VarStatus::kBasic ? 0.0 : delta * alpha_[j];
  w[p] = delta;

  if (certificate_blocked_by_artificials(w)) {
    // The ray leans on an artificial bound, so it proves nothing about the
    // real box. Widen and keep iterating.
    for (int j = 0; j < total_; ++j) {
      if (w[j] > tol::kZero && art_lb_[j]) lb_[j] *= 1024.0;
      if (w[j] < -tol::kZero && art_ub_[j]) ub_[j] *= 1024.0;
    }
    if (++art_rounds_ > kMaxArtificialRounds)
      throw Error("LP undecidable: infeasibility ray keeps hitting artificial bounds");
    *retry = true;
    return {};
  }

  double vmin = 0.0;
  for (int j = 0; j < total_; ++j) {
    if (w[j] > tol::kZero) vmin += w[j] * lb_[j];
    else if (w[j] < -tol::kZero) vmin += w[j] * ub_[j];
  }
  const double* rho = &binv_[static_cast<size_t>(leave_row) * m_];
  double rhs_side = 0.0;
  for (int k = 0; k < m_; ++k) rhs_side += rho[k] * rhs_[k];
  rhs_side *= delta;
  double margin = vmin - rhs_side;

  LpOutcome out;
  out.iterations = iterations;
  out.objective = kInf;
  out.basis = snapshot_basis();
  if (std::isfinite(margin) && margin > tol::kZero) {
    out.status = LpStatus::kInfeasible;
    out.has_certificate = true;
    out.dual_info.assign(w.begin(), w.begin() + n_);
    out.row_duals.assign(m_, 0.0);
    for (int k = 0; k < m_; ++k) out.row_duals[k] = -delta * rho[k];
  } else {
    out.status = LpStatus::kDualUnboundedInfeasible;
    out.has_certificate = false;
  }
  return out;
}

LpOutcome DualSimplex::finalize_iteration_limit(int iterations) {
  if (refactor()) {
    compute_duals();
    compute_primals();
  }
  LpOutcome out;
  out.status = LpStatus::kIterationLimit;
  out.iterations = iterations;
  out.objective = current_objective();  // dual bound at the stopping basis
  out.dual_info.assign(d_.begin(), d_.begin() + n_);
  out.row_duals = y_;
  out.basis = snapshot_basis();
  return out;
}

LpOutcome DualSimplex::solve(int iteration_cap) {
  int cap = iteration_cap >= 0 ? iteration_cap : default_iteration_cap();
  ensure_valid_basis();
  if (!refactor()) {
    reset_basis();
    refactor();
  }
  fresh_factor_ = true;
  compute_duals();
  repair_dual_feasibility();
  bland_ = false;
  stall_ = 0;
  since_refactor_ = 0;
  art_rounds_ = 0;

  int iterations = 0;
  for (;;) {
    compute_primals();
    double delta = 0.0;
    int leave_row = pick_leaving(&delta);
    if (leave_row < 0) {
      if (!fresh_factor_) {
        if (!refactor()) {
          reset_basis();
          refactor();
          compute_duals();
          repair_dual_feasibility();
        } else {
          compute_duals();
        }
        fresh_factor_ = true;
        continue;
      }
      if (resolve_artificial_bounds()) continue;
      return finalize_optimal(iterations);
    }
    if (iterations >= cap) return finalize_iteration_limit(iterations);
    int enter = ratio_test(leave_row, delta);
    if (enter < 0) {
      if (!fresh_factor_) {
        if (!refactor()) {
          reset_basis();
          refactor();
          repair_dual_feasibility();
        }
        compute_duals();
        fresh_factor_ = true;
        continue;
      }
      bool retry = false;
      LpOutcome out = finalize_infeasible(leave_row, delta, iterations, &retry);
      if (retry) continue;
      return out;
    }
    double mu = d_[enter] / alpha_[enter];
    if (std::fabs(mu) <= 1e-12) {
      if (++stall_ >= kStallLimit) bland_ = true;
    } else {
      stall_ = 0;
    }
    pivot(leave_row, enter, delta);
    ++iterations;
    fresh_factor_ = false;
    if (++since_refactor_ >= kRefactorInterval) {
      if (!refactor()) {
        reset_basis();
        refactor();
        repair_dual_feasibility();
      }
      compute_duals();
      since_refactor_ = 0;
      fresh_factor_ = true;
    }
  }
}

// ---------------------------------------------------------------------------

LpOutcome solve_from_scratch(const LpModel& model,
                             const std::vector<double>& lower,
                             const std::vector<double>& upper,
                             int iteration_cap) {
  DualSimplex solver(model);
  solver.set_bounds(lower, upper);
  solver.reset_basis();
  return solver.solve(iteration_cap);
}

LpOutcome hotstart_solve(const LpModel& model, const Basis& basis,
                         const std::vector<double>& lower,
                         const std::vector<double>& upper,
                         const BoundChangeSpec& change, int iteration_cap) {
  DualSimplex solver(model);
  solver.set_bounds(lower, upper);
  solver.set_basis(basis);
  solver.change_bound(change.var, change.side, change.value);
  return solver.solve(iteration_cap);
}

}  // namespace osbb
