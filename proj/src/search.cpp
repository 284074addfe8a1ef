#include "osbb/search.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <cmath>
#include <sstream>

namespace osbb {

namespace {

// Validates and pulls integer bounds onto their integral hull before the
// relaxation is built. A hull that comes out empty is left alone; run()
// reports such instances infeasible before solving anything.
const LpModel& validated_lp(MilpProblem& p, LpModel* storage) {
  p.validate();
  for (int i = 0; i < p.num_vars(); ++i) {
    if (!p.integral[i]) continue;
    double lo = p.lower[i] == -kInf ? -kInf : std::ceil(p.lower[i] - tol::kIntegral);
    double hi = p.upper[i] == kInf ? kInf : std::floor(p.upper[i] + tol::kIntegral);
    if (lo <= hi) {
      p.lower[i] = lo;
      p.upper[i] = hi;
    }
  }
  *storage = p.to_lp();
  return *storage;
}

bool integer_domain_empty(const MilpProblem& p) {
  for (int i = 0; i < p.num_vars(); ++i) {
    if (!p.integral[i]) continue;
    if (std::ceil(p.lower[i] - tol::kIntegral) >
        std::floor(p.upper[i] + tol::kIntegral))
      return true;
  }
  return false;
}

}  // namespace

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::kOptimal: return "optimal";
    case SolveStatus::kInfeasible: return "infeasible";
    case SolveStatus::kLimit: return "limit";
  }
  return "?";
}

std::string event_to_json(const SearchEvent& e) {
  std::ostringstream out;
  out.precision(17);
  out << "{\"node\":" << e.node << ",\"action\":\"" << to_string(e.action)
      << "\",\"offshoot\":" << e.offshoot_id
      << ",\"parent\":" << e.parent_offshoot_id << ",\"outcome\":\""
      << to_string(e.outcome) << "\",\"objective\":";
  if (std::isnan(e.objective)) out << "null";
  else out << e.objective;
  out << "}";
  return out.str();
}

Search::Search(const MilpProblem& problem, SolveConfig config)
    : problem_(problem),
      cfg_(std::move(config)),
      lp_(),
      solver_(validated_lp(problem_, &lp_)),
      aux_(lp_),
      store_(problem_.num_vars(), cfg_.reliability_limit),
      integral_(problem_.integral.begin(), problem_.integral.end()) {}

int Search::alloc_id() {
  ++stats_.offshoots;
  return next_offshoot_id_++;
}

double Search::elapsed() const {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start_time_).count();
}

bool Search::node_integral(const std::vector<double>& x) const {
  for (int i = 0; i < problem_.num_vars(); ++i) {
    if (!integral_[i]) continue;
    if (is_fractional(x[i])) return false;
  }
  return true;
}

void Search::box_for(const std::vector<BoundChange>& changes,
                     std::vector<double>* lo, std::vector<double>* hi) const {
  *lo = problem_.lower;
  *hi = problem_.upper;
  apply_changes(changes, *lo, *hi);
}

LpOutcome Search::lp_solve_counted() {
  if (cfg_.node_limit && stats_.nodes >= *cfg_.node_limit) throw LimitReached{};
  if (cfg_.time_limit_sec && elapsed() > *cfg_.time_limit_sec) throw LimitReached{};
  LpOutcome out = solver_.solve();
  ++stats_.nodes;
  ++stats_.lp_solves;
  stats_.lp_iterations += out.iterations;
  ++node_counter_;
  if (out.status == LpStatus::kIterationLimit)
    throw Error("node LP hit the iteration safeguard; search aborted");
  return out;
}

LpOutcome Search::solve_node(const std::vector<BoundChange>& changes,
                             const Basis* warm) {
  box_for(changes, &box_lo_, &box_hi_);
  solver_.set_bounds(box_lo_, box_hi_);
  if (warm) solver_.set_basis(*warm);
  else solver_.reset_basis();
  return lp_solve_counted();
}

LpOutcome Search::quiet_solve(const std::vector<BoundChange>& changes,
                              const Basis* warm, long* counter) {
  std::vector<double> lo, hi;
  box_for(changes, &lo, &hi);
  aux_.set_bounds(lo, hi);
  if (warm) aux_.set_basis(*warm);
  else aux_.reset_basis();
  LpOutcome out = aux_.solve();
  ++stats_.lp_solves;
  stats_.lp_iterations += out.iterations;
  if (counter) ++*counter;
  return out;
}

NodeOutcome Search::classify(const LpOutcome& out, double cutoff_before) const {
  if (lp_infeasible(out.status)) return NodeOutcome::kInfeasible;
  if (out.objective >= cutoff_before - tol::kCutoff) return NodeOutcome::kCutoff;
  if (node_integral(out.primal)) return NodeOutcome::kIntegral;
  return NodeOutcome::kFractional;
}

void Search::emit(NodeAction action, int offshoot_id, int parent_id,
                  const LpOutcome& out, double cutoff_before) {
  if (!cfg_.event_sink) return;
  SearchEvent e;
  e.node = node_counter_;
  e.action = action;
  e.offshoot_id = offshoot_id;
  e.parent_offshoot_id = parent_id;
  e.outcome = classify(out, cutoff_before);
  e.objective = lp_infeasible(out.status)
                    ? std::numeric_limits<double>::quiet_NaN()
                    : out.objective;
  cfg_.event_sink(e);
}

// ---------------------------------------------------------------------------
// building blocks

DiveChoice Search::choose_dive_variable(const LpOutcome& state) {
  DiveContext ctx{state.primal, integral_, box_lo_, box_hi_, state.objective};
  if (cfg_.dive_variable_hook) {
    int var = cfg_.dive_variable_hook(ctx);
    double frac = fractional_part(state.primal[var]);
    bool up = cfg_.dive_direction == DiveDirection::kUp ||
              (cfg_.dive_direction == DiveDirection::kRound && frac >= 0.5);
    return {var, up, false};
  }
  double mean = dive_lp_count_ > 0
                    ? static_cast<double>(dive_lp_iter_sum_) / dive_lp_count_
                    : 0.0;
  int probe_cap = std::max(50, static_cast<int>(2.0 * mean));
  ProbeFn probe = [&](int var, bool up, int iteration_cap) {
    double v = state.primal[var];
    double old_lo = box_lo_[var], old_hi = box_hi_[var];
    if (up) solver_.change_bound(var, BoundSide::kLower, std::ceil(v));
    else solver_.change_bound(var, BoundSide::kUpper, std::floor(v));
    LpOutcome res = solver_.solve(iteration_cap);
    ++stats_.strong_branch_lps;
    ++stats_.lp_solves;
    stats_.lp_iterations += res.iterations;
    solver_.change_bound(var, BoundSide::kLower, old_lo);
    solver_.change_bound(var, BoundSide::kUpper, old_hi);
    solver_.set_basis(state.basis);
    return res;
  };
  auto choice = select_dive_variable(ctx, store_, probe, probe_cap,
                                     cfg_.dive_direction,
                                     cfg_.strong_branch_candidates);
  if (!choice)
    throw ContractViolation("dive variable selection on an integral node");
  return *choice;
}

void Search::dive(Offshoot& shoot, LpOutcome state, int max_changes) {
  double prev_obj = state.objective;
  for (;;) {
    if (node_integral(state.primal)) {
      update_cutoff(state.primal, state.objective, node_counter_);
      shoot.terminal = TerminalKind::kCutoff;
      shoot.dual_info = state.dual_info;
      shoot.cutoff_at_terminal = cutoff_;
      return;
    }
    if (static_cast<int>(shoot.dive_changes.size()) >= max_changes) {
      shoot.terminal = TerminalKind::kOpen;
      shoot.dual_info.clear();
      if (!shoot.dive_changes.empty()) {
        // the unfinished bottom node lives on as an open node
        Offshoot open;
        open.id = alloc_id();
        open.top_changes = shoot.top_changes;
        open.top_changes.insert(open.top_changes.end(),
                                shoot.dive_changes.begin(),
                                shoot.dive_changes.end());
        open.top_bound = state.objective;
        open.top_basis = state.basis;
        open.top_primal = state.primal;
        pool_.push(std::move(open));
      }
      return;
    }
    DiveChoice choice = choose_dive_variable(state);
    double v = state.primal[choice.var];
    BoundChange c;
    c.var = choice.var;
    c.frac_at_branch = fractional_part(v);
    c.chrono = static_cast<int>(shoot.dive_changes.size());
    if (choice.up) {
      c.side = BoundSide::kLower;
      c.value = std::ceil(v);
    } else {
      c.side = BoundSide::kUpper;
      c.value = std::floor(v);
    }
    solver_.change_bound(c.var, c.side, c.value);
    apply_change(c, box_lo_, box_hi_);
    double cutoff_before = cutoff_;
    state = lp_solve_counted();
    ++dive_lp_count_;
    dive_lp_iter_sum_ += state.iterations;
    emit(NodeAction::kDive, shoot.id, -1, state, cutoff_before);
    if (state.status == LpStatus::kOptimal) {
      double dist = choice.up ? 1.0 - c.frac_at_branch : c.frac_at_branch;
      store_.update(c.var, choice.up, state.objective - prev_obj, dist);
    }
    if (lp_infeasible(state.status)) {
      shoot.dive_changes.push_back(c);
      shoot.terminal = TerminalKind::kInfeasible;
      shoot.dual_info = state.has_certificate ? state.dual_info
                                              : std::vector<double>{};
      shoot.cutoff_at_terminal = cutoff_;
      return;
    }
    c.node_objective = state.objective;
    shoot.dive_changes.push_back(c);
    if (state.objective >= cutoff_ - tol::kCutoff) {
      shoot.terminal = TerminalKind::kCutoff;
      shoot.dual_info = state.dual_info;
      shoot.cutoff_at_terminal = cutoff_;
      return;
    }
    prev_obj = state.objective;
  }
}

std::vector<BoundChange> Search::branch_bottom(Offshoot& parent, int dive_index) {
  auto& dive = parent.dive_changes;
  if (dive_index < 0 || dive_index >= static_cast<int>(dive.size()))
    throw ContractViolation("branch_bottom: bad dive index");
  BoundChange chosen = dive[dive_index];
  if (chosen.processed) throw ContractViolation("branch_bottom: change already processed");
  std::vector<BoundChange> child = parent.top_changes;
  for (int i = 0; i < static_cast<int>(dive.size()); ++i)
    if (i != dive_index) child.push_back(dive[i]);
  child.push_back(flipped(chosen));
  if (dive_index != static_cast<int>(dive.size()) - 1)
    parent.disturbed = true;  // recorded objectives no longer trace a prefix
  dive.erase(dive.begin() + dive_index);
  return child;
}

std::vector<BoundChange> Search::branch_top(Offshoot& parent, int dive_index) {
  auto& dive = parent.dive_changes;
  if (dive_index < 0 || dive_index >= static_cast<int>(dive.size()))
    throw ContractViolation("branch_top: bad dive index");
  BoundChange chosen = dive[dive_index];
  if (chosen.processed) throw ContractViolation("branch_top: change already processed");
  std::vector<BoundChange> child = parent.top_changes;
  child.push_back(flipped(chosen));
  chosen.processed = true;
  parent.top_changes.push_back(chosen);
  if (dive_index != 0) parent.disturbed = true;
  dive.erase(dive.begin() + dive_index);
  parent.top_bound_stale = true;  // still valid, just weaker than possible
  return child;
}

int Search::trim_offshoot(Offshoot& shoot) {
  shoot.trimmed = true;
  if (shoot.terminal == TerminalKind::kOpen) return 0;
  auto& dive = shoot.dive_changes;
  if (dive.empty()) return 0;

  // (a) dual-information rule: a lower change is removable at r <= 0, an
  // upper change at r >= 0
  std::vector<char> drop(dive.size(), 0);
  int dual_n = 0;
  if (!shoot.dual_info.empty()) {
    for (size_t i = 0; i < dive.size(); ++i) {
      double r = shoot.dual_info[dive[i].var];
      bool removable = dive[i].side == BoundSide::kLower ? r <= tol::kZero
                                                         : r >= -tol::kZero;
      if (removable) {
        drop[i] = 1;
        ++dual_n;
      }
    }
    if (dual_n == static_cast<int>(dive.size())) {
      // a certificate can never cover the whole dive; treat as numerics
      std::fill(drop.begin(), drop.end(), 0);
      dual_n = 0;
    }
  }

  // (b) bottom pruning on the recorded objectives (undisturbed dives only)
  int keep = static_cast<int>(dive.size());
  if (!shoot.disturbed && cutoff_ < kInf) {
    for (int k = 1; k <= static_cast<int>(dive.size()); ++k) {
      double obj = dive[k - 1].node_objective;
      if (!std::isnan(obj) && obj >= cutoff_ - tol::kCutoff) {
        keep = k;
        break;
      }
    }
  }
  int bottom_n = static_cast<int>(dive.size()) - keep;

  int removed = 0;
  if (dual_n > 0 && dual_n >= bottom_n) {  // ties prefer the dual rule
    std::vector<BoundChange> rest;
    for (size_t i = 0; i < dive.size(); ++i)
      if (!drop[i]) rest.push_back(dive[i]);
    dive = std::move(rest);
    removed = dual_n;
  } else if (bottom_n > 0) {
    dive.resize(keep);
    shoot.terminal = TerminalKind::kCutoff;
    shoot.cutoff_at_terminal = cutoff_;
    removed = bottom_n;
  }

  // dedup repeated same-side changes, keeping the tightest
  for (size_t i = 0; i < dive.size(); ++i) {
    for (size_t j = i + 1; j < dive.size();) {
      if (dive[j].var == dive[i].var && dive[j].side == dive[i].side) {
        bool j_tighter = dive[i].side == BoundSide::kLower
                             ? dive[j].value > dive[i].value
                             : dive[j].value < dive[i].value;
        if (j_tighter) dive[i].value = dive[j].value;
        dive.erase(dive.begin() + j);
        ++removed;
      } else {
        ++j;
      }
    }
  }

  if (removed > 0) {
    shoot.disturbed = true;
    ++stats_.trims;
    stats_.trim_removed += removed;
    if (cfg_.audit_trims) audit_trim(shoot);
  }
  return removed;
}

void Search::audit_trim(const Offshoot& shoot) {
  ++stats_.trim_audits;
  std::vector<BoundChange> all = shoot.top_changes;
  all.insert(all.end(), shoot.dive_changes.begin(), shoot.dive_changes.end());
  LpOutcome out = quiet_solve(all, &shoot.top_basis, nullptr);
  bool prunable = lp_infeasible(out.status) ||
                  out.objective >= cutoff_ - tol::kCutoff;
  if (!prunable) ++stats_.trim_audit_failures;
}

bool Search::update_cutoff(const std::vector<double>& point, double objective,
                           long node_id) {
  // validate integrality, bounds, and rows before accepting
  for (int i = 0; i < problem_.num_vars(); ++i) {
    if (integral_[i] && is_fractional(point[i]))
      throw ContractViolation("incumbent candidate is not integral");
    if (point[i] < problem_.lower[i] - tol::kObjective ||
        point[i] > problem_.upper[i] + tol::kObjective)
      throw ContractViolation("incumbent candidate violates global bounds");
  }
  for (const ProblemRow& row : problem_.rows) {
    double act = 0.0;
    for (auto [j, a] : row.coef) act += a * point[j];
    bool ok = true;
    switch (row.sense) {
      case RowSense::kLe: ok = act <= row.rhs + tol::kObjective; break;
      case RowSense::kGe: ok = act >= row.rhs - tol::kObjective; break;
      case RowSense::kEq: ok = std::fabs(act - row.rhs) <= tol::kObjective; break;
    }
    if (!ok) throw ContractViolation("incumbent candidate violates a row");
  }
  if (objective >= cutoff_ - tol::kCutoff) return false;
  cutoff_ = objective;
  incumbent_.point = point;
  incumbent_.objective = objective;
  incumbent_.node_id = node_id;
  ++stats_.incumbents;
  stats_.prunes_by_bound += pool_.purge_dominated(cutoff_);
  return true;
}

Offshoot* Search::select_offshoot() { return pool_.select(cfg_.node_selection); }

double Search::strengthen_top_bound(Offshoot& parent, const LpOutcome& child_top,
                                    int branched_var,
                                    const std::vector<BoundChange>& child_changes,
                                    BoundingMethod method) {
  if (child_top.status != LpStatus::kOptimal) return parent.top_bound;
  std::vector<double> plo, phi, clo, chi;
  box_for(parent.top_changes, &plo, &phi);
  box_for(child_changes, &clo, &chi);

  auto reduced_cost_step = [&]() {
    double bound = child_top.objective;
    double r = child_top.dual_info[branched_var];
    if (r > tol::kZero) bound += r * (plo[branched_var] - clo[branched_var]);
    else if (r < -tol::kZero) bound += r * (phi[branched_var] - chi[branched_var]);
    return bound;
  };
  auto dual_evaluation = [&]() {
    return child_top.dual_bound_for_box(lp_, plo, phi);
  };
  auto resolve = [&]() {
    LpOutcome out = quiet_solve(parent.top_changes, &child_top.basis,
                                &stats_.bounding_lps);
    if (lp_infeasible(out.status)) return kInf;
    parent.top_basis = out.basis;
    parent.top_primal = out.primal;
    return out.objective;
  };

  if (cfg_.bounding_audit_hook) {
    double m1 = reduced_cost_step();
    double m2 = dual_evaluation();
    double m3 = resolve();
    cfg_.bounding_audit_hook(m1, m2, m3);
    parent.top_bound_stale = false;
    parent.top_bound = std::max(parent.top_bound, m3);
    return parent.top_bound;
  }

  switch (method) {
    case BoundingMethod::kOff:
      break;
    case BoundingMethod::kReducedCostStep:
      parent.top_bound = std::max(parent.top_bound, reduced_cost_step());
      break;
    case BoundingMethod::kDualEvaluation:
      parent.top_bound = std::max(parent.top_bound, dual_evaluation());
      break;
    case BoundingMethod::kResolve:
      parent.top_bound = std::max(parent.top_bound, resolve());
      parent.top_bound_stale = false;
      break;
  }
  return parent.top_bound;
}

std::pair<Offshoot, Offshoot> Search::split_offshoot(const Offshoot& shoot, int k) {
  if (shoot.disturbed)
    throw ContractViolation("split_offshoot: offshoot already disturbed");
  if (k < 1 || k >= static_cast<int>(shoot.dive_changes.size()))
    throw ContractViolation("split_offshoot: bad split position");

  Offshoot top;
  top.id = alloc_id();
  top.top_changes = shoot.top_changes;
  top.dive_changes.assign(shoot.dive_changes.begin(),
                          shoot.dive_changes.begin() + k);
  top.top_bound = shoot.top_bound;
  top.top_basis = shoot.top_basis;
  top.top_primal = shoot.top_primal;
  top.terminal = TerminalKind::kOpen;  // its bottom node belongs to `bottom`

  Offshoot bottom;
  bottom.id = alloc_id();
  bottom.top_changes = top.top_changes;
  bottom.top_changes.insert(bottom.top_changes.end(), top.dive_changes.begin(),
                            top.dive_changes.end());
  bottom.dive_changes.assign(shoot.dive_changes.begin() + k,
                             shoot.dive_changes.end());
  bottom.terminal = shoot.terminal;
  bottom.dual_info = shoot.dual_info;
  bottom.cutoff_at_terminal = shoot.cutoff_at_terminal;
  LpOutcome out = quiet_solve(bottom.top_changes, &shoot.top_basis,
                              &stats_.split_lps);
  if (out.status == LpStatus::kOptimal) {
    bottom.top_bound = out.objective;
    bottom.top_basis = out.basis;
    bottom.top_primal = out.primal;
  } else {
    bottom.top_bound = kInf;  // region is already pruned; drops on insert
  }
  return {std::move(top), std::move(bottom)};
}

std::pair<std::vector<BoundChange>, LpOutcome> Search::plunge(
    const std::vector<BoundChange>& node_changes, const LpOutcome& node_state) {
  if (node_state.status != LpStatus::kOptimal)
    throw ContractViolation("plunge: node LP must be optimal");
  if (node_integral(node_state.primal)) {
    update_cutoff(node_state.primal, node_state.objective, node_counter_);
    return {{}, node_state};
  }
  std::vector<double> lo, hi;
  box_for(node_changes, &lo, &hi);
  std::vector<BoundChange> fixes;
  for (int i = 0; i < problem_.num_vars(); ++i) {
    if (!integral_[i]) continue;
    double v = std::round(std::clamp(node_state.primal[i], lo[i], hi[i]));
    if (lo[i] < v - tol::kZero) {
      BoundChange c;
      c.var = i;
      c.side = BoundSide::kLower;
      c.value = v;
      c.frac_at_branch = fractional_part(node_state.primal[i]);
      c.chrono = static_cast<int>(fixes.size());
      fixes.push_back(c);
    }
    if (hi[i] > v + tol::kZero) {
      BoundChange c;
      c.var = i;
      c.side = BoundSide::kUpper;
      c.value = v;
      c.frac_at_branch = fractional_part(node_state.primal[i]);
      c.chrono = static_cast<int>(fixes.size());
      fixes.push_back(c);
    }
  }
  std::vector<BoundChange> all = node_changes;
  all.insert(all.end(), fixes.begin(), fixes.end());
  LpOutcome out = solve_node(all, &node_state.basis);
  if (out.status == LpStatus::kOptimal &&
      out.objective < cutoff_ - tol::kCutoff && node_integral(out.primal)) {
    update_cutoff(out.primal, out.objective, node_counter_);
  }
  return {std::move(fixes), std::move(out)};
}

// ---------------------------------------------------------------------------
// main loop

void Search::insert_with_split(Offshoot&& shoot) {
  if (!shoot.disturbed && cfg_.split_threshold > 0 &&
      static_cast<int>(shoot.dive_changes.size()) >= 2 * cfg_.split_threshold) {
    auto [top, bottom] = split_offshoot(shoot,
                                        static_cast<int>(shoot.dive_changes.size()) / 2);
    insert_with_split(std::move(top));
    if (bottom.top_bound >= cutoff_ - tol::kCutoff) {
      ++stats_.prunes_by_bound;
      return;
    }
    insert_with_split(std::move(bottom));
    return;
  }
  pool_.push(std::move(shoot));
}

void Search::finalize_insert(Offshoot&& shoot) {
  if (shoot.dive_changes.empty()) {
    // either an integral/pruned bottom handled elsewhere, or a zero-length
    // dive under depth limit 0: keep the bare node open in that case
    if (shoot.terminal == TerminalKind::kOpen &&
        shoot.top_bound < cutoff_ - tol::kCutoff) {
      pool_.push(std::move(shoot));
    }
    return;
  }
  if (shoot.terminal != TerminalKind::kOpen && cfg_.offshoot_created_hook)
    cfg_.offshoot_created_hook(shoot, cutoff_);
  if (shoot.top_bound >= cutoff_ - tol::kCutoff) {
    ++stats_.prunes_by_bound;  // an incumbent found mid-dive overtook the top
    return;
  }
  insert_with_split(std::move(shoot));
}

void Search::expand_open_node(Offshoot& entry) {
  Offshoot local = entry;
  pool_.remove(&entry);
  box_for(local.top_changes, &box_lo_, &box_hi_);
  solver_.set_bounds(box_lo_, box_hi_);
  solver_.set_basis(local.top_basis);
  LpOutcome state;
  state.status = LpStatus::kOptimal;
  state.objective = local.top_bound;
  state.primal = local.top_primal;
  state.basis = local.top_basis;
  int cap = cfg_.max_dive_depth ? std::max(1, *cfg_.max_dive_depth) : INT_MAX;
  dive(local, std::move(state), cap);
  finalize_insert(std::move(local));
}

void Search::step_offshoot(Offshoot& entry) {
  if (cfg_.trim && !entry.trimmed) trim_offshoot(entry);
  entry.trimmed = true;

  StrategyChoice choice{-1, false};
  if (cfg_.offshoot_choice_hook) {
    if (auto scripted = cfg_.offshoot_choice_hook(entry)) {
      for (size_t i = 0; i < entry.dive_changes.size(); ++i)
        if (entry.dive_changes[i].var == scripted->var)
          choice = {static_cast<int>(i), scripted->from_top};
      if (choice.dive_index < 0)
        throw ContractViolation("scripted offshoot variable not in the dive");
    }
  }
  if (choice.dive_index < 0)
    choice = select_offshoot_variable(entry, cfg_.strategy, store_);

  int branched_var = entry.dive_changes[choice.dive_index].var;
  double parent_bound = entry.top_bound;
  Basis parent_basis = entry.top_basis;
  int parent_id = entry.id;

  std::vector<BoundChange> child_changes =
      choice.from_top ? branch_top(entry, choice.dive_index)
                      : branch_bottom(entry, choice.dive_index);
  Offshoot* parent_alive = &entry;
  if (entry.dive_changes.empty()) {
    // fully processed: the terminal node accounts for the leftover region
    pool_.remove(&entry);
    parent_alive = nullptr;
  }

  double cutoff_before = cutoff_;
  LpOutcome child = solve_node(child_changes, &parent_basis);
  if (cfg_.child_top_hook) cfg_.child_top_hook(parent_bound, child, choice.from_top);

  if (choice.from_top && parent_alive &&
      (cfg_.bounding != BoundingMethod::kOff || cfg_.bounding_audit_hook)) {
    strengthen_top_bound(*parent_alive, child, branched_var, child_changes,
                         cfg_.bounding);
    if (parent_alive->top_bound >= cutoff_ - tol::kCutoff) {
      pool_.remove(parent_alive);
      ++stats_.prunes_by_bound;
      parent_alive = nullptr;
    }
  }

  if (lp_infeasible(child.status) ||
      child.objective >= cutoff_ - tol::kCutoff) {
    emit(NodeAction::kTop, -1, parent_id, child, cutoff_before);
    return;
  }
  if (node_integral(child.primal)) {
    emit(NodeAction::kTop, -1, parent_id, child, cutoff_before);
    update_cutoff(child.primal, child.objective, node_counter_);
    return;
  }

  Offshoot next;
  next.id = alloc_id();
  next.top_changes = std::move(child_changes);
  next.top_bound = child.objective;
  next.top_basis = child.basis;
  next.top_primal = child.primal;
  emit(NodeAction::kTop, next.id, parent_id, child, cutoff_before);
  int cap = cfg_.max_dive_depth ? *cfg_.max_dive_depth : INT_MAX;
  if (cap > 0) dive(next, std::move(child), cap);
  finalize_insert(std::move(next));
}

SolveResult Search::finish(SolveStatus status, bool proven) {
  stats_.wall_time_sec = elapsed();
  SolveResult res;
  res.status = status;
  res.proven = proven;
  res.objective = incumbent_.valid() ? incumbent_.objective : kInf;
  res.best_point = incumbent_.point;
  res.incumbent_node = incumbent_.node_id;
  res.stats = stats_;
  return res;
}

SolveResult Search::run() {
  start_time_ = std::chrono::steady_clock::now();
  if (integer_domain_empty(problem_)) return finish(SolveStatus::kInfeasible, true);
  try {
    LpOutcome root = solve_node({}, nullptr);
    emit(NodeAction::kRoot, 0, -1, root, cutoff_);
    if (lp_infeasible(root.status)) return finish(SolveStatus::kInfeasible, true);
    if (node_integral(root.primal)) {
      update_cutoff(root.primal, root.objective, node_counter_);
      return finish(SolveStatus::kOptimal, true);
    }
    Offshoot first;
    first.id = alloc_id();
    first.top_bound = root.objective;
    first.top_basis = root.basis;
    first.top_primal = root.primal;
    pool_.push(std::move(first));

    while (!pool_.empty()) {
      Offshoot* next = select_offshoot();
      if (next->is_open_node()) expand_open_node(*next);
      else step_offshoot(*next);
    }
    return finish(incumbent_.valid() ? SolveStatus::kOptimal
                                     : SolveStatus::kInfeasible,
                  true);
  } catch (const LimitReached&) {
    return finish(SolveStatus::kLimit, false);
  }
}

}  // namespace osbb
