#include "osbb/branching.hpp"

#include <algorithm>
#include <cmath>

namespace osbb {

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::kBottom: return "bottom";
    case Strategy::kTop: return "top";
    case Strategy::kPseudo: return "pseudo";
    case Strategy::kPseudoDual: return "pseudodual";
  }
  return "?";
}

bool strategy_from_string(const std::string& text, Strategy* out) {
  if (text == "bottom") *out = Strategy::kBottom;
  else if (text == "top") *out = Strategy::kTop;
  else if (text == "pseudo") *out = Strategy::kPseudo;
  else if (text == "pseudodual") *out = Strategy::kPseudoDual;
  else return false;
  return true;
}

double fractional_part(double v) { return v - std::floor(v); }

bool is_fractional(double v) {
  double f = fractional_part(v);
  return f > tol::kIntegral && f < 1.0 - tol::kIntegral;
}

std::optional<DiveChoice> select_dive_variable(const DiveContext& ctx,
                                               PseudocostStore& store,
                                               const ProbeFn& probe,
                                               int probe_iteration_cap,
                                               DiveDirection direction,
                                               int candidate_cap) {
  const int n = static_cast<int>(ctx.x.size());
  std::vector<int> candidates;
  for (int i = 0; i < n; ++i) {
    if (!ctx.integral[i]) continue;
    if (ctx.lower[i] >= ctx.upper[i] - tol::kZero) continue;
    if (is_fractional(ctx.x[i])) candidates.push_back(i);
  }
  if (candidates.empty()) return std::nullopt;

  // most-fractional preorder, lowest index on ties
  std::stable_sort(candidates.begin(), candidates.end(), [&](int a, int b) {
    double da = std::fabs(fractional_part(ctx.x[a]) - 0.5);
    double db = std::fabs(fractional_part(ctx.x[b]) - 0.5);
    if (da != db) return da < db;
    return a < b;
  });
  if (static_cast<int>(candidates.size()) > candidate_cap)
    candidates.resize(candidate_cap);

  // strong-branch the unreliable candidates, feeding the store
  for (int var : candidates) {
    if (store.reliable(var)) continue;
    if (!probe) continue;
    double frac = fractional_part(ctx.x[var]);
    for (bool up : {false, true}) {
      LpOutcome out = probe(var, up, probe_iteration_cap);
      if (lp_infeasible(out.status)) {
        // that side is empty: the opposite bound change holds at this node
        return DiveChoice{var, !up, true};
      }
      double dist = up ? 1.0 - frac : frac;
      store.update(var, up, out.objective - ctx.node_objective, dist);
    }
  }

  int best = -1;
  double best_score = -1.0;
  for (int var : candidates) {
    double s = store.score(var, fractional_part(ctx.x[var]));
    if (best < 0 || s > best_score + 1e-12 ||
        (s > best_score - 1e-12 && var < best)) {
      best = var;
      best_score = s;
    }
  }

  double frac = fractional_part(ctx.x[best]);
  bool up = false;
  switch (direction) {
    case DiveDirection::kRound: up = frac >= 0.5; break;
    case DiveDirection::kUp: up = true; break;
    case DiveDirection::kDown: up = false; break;
  }
  return DiveChoice{best, up, false};
}

StrategyChoice select_offshoot_variable(const Offshoot& shoot, Strategy strategy,
                                        const PseudocostStore& store) {
  const auto& dive = shoot.dive_changes;
  if (dive.empty())
    throw ContractViolation("offshoot variable selection on an empty dive");

  switch (strategy) {
    case Strategy::kBottom:
      return {static_cast<int>(dive.size()) - 1, false};
    case Strategy::kTop:
      return {0, true};
    case Strategy::kPseudo:
    case Strategy::kPseudoDual:
      break;
  }

  // best reliable pseudocost score branches from the top
  int best = -1;
  double best_score = 0.0;
  for (size_t i = 0; i < dive.size(); ++i) {
    if (!store.reliable(dive[i].var)) continue;
    double s = store.score(dive[i].var, dive[i].frac_at_branch);
    if (best < 0 || s > best_score + 1e-12 ||
        (s > best_score - 1e-12 && dive[i].var < dive[best].var)) {
      best = static_cast<int>(i);
      best_score = s;
    }
  }
  if (best >= 0) return {best, true};

  // no reliable entry: send the least promising change to the bottom
  bool use_dual = strategy == Strategy::kPseudoDual &&
                  !shoot.dual_info.empty();
  int worst = -1;
  double worst_score = 0.0;
  for (size_t i = 0; i < dive.size(); ++i) {
    double s = use_dual ? std::fabs(shoot.dual_info[dive[i].var])
                        : store.score(dive[i].var, dive[i].frac_at_branch);
    if (worst < 0 || s < worst_score - 1e-12 ||
        (s < worst_score + 1e-12 && dive[i].var < dive[worst].var)) {
      worst = static_cast<int>(i);
      worst_score = s;
    }
  }
  return {worst, false};
}

}  // namespace osbb
