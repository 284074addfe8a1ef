// Acceptance suite: runs every top-level correctness criterion at its stated
// tolerance and prints one [PASS]/[FAIL] line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <deque>
#include <memory>
#include <random>
#include <sstream>
#include <vector>

#include "osbb/compare.hpp"
#include "osbb/oracle.hpp"
#include "osbb/random_instance.hpp"
#include "osbb/search.hpp"

using namespace osbb;

namespace {

int g_failures = 0;

void report(const std::string& name, bool pass, const std::string& detail) {
  std::printf("[%s] %s (%s)\n", pass ? "PASS" : "FAIL", name.c_str(),
              detail.c_str());
  if (!pass) ++g_failures;
}

MilpProblem example1_problem() {
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

int lowest_index_fractional(const DiveContext& ctx) {
  for (int i = 0; i < static_cast<int>(ctx.x.size()); ++i) {
    if (!ctx.integral[i]) continue;
    if (ctx.lower[i] >= ctx.upper[i] - tol::kZero) continue;
    if (is_fractional(ctx.x[i])) return i;
  }
  throw ContractViolation("no fractional variable");
}

MilpProblem corpus_instance(int i) {
  GeneratorProfile prof;
  prof.density = 0.5 + 0.05 * (i % 7);
  prof.ensure_feasible = i % 10 != 7;  // a slice of possibly-infeasible inputs
  return generate_random(10000 + i, 4 + i % 9, 2 + i % 9, prof);
}

// ---------------------------------------------------------------------------

void fixture_depth_first() {
  auto start = std::chrono::steady_clock::now();
  SolveConfig cfg;
  cfg.strategy = Strategy::kBottom;
  cfg.trim = false;
  cfg.node_selection = NodeSelection::kDepthFirst;
  cfg.dive_direction = DiveDirection::kUp;
  cfg.dive_variable_hook = lowest_index_fractional;
  Search s(example1_problem(), cfg);
  SolveResult res = s.run();
  double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             start).count();
  bool pass = res.status == SolveStatus::kOptimal && res.stats.nodes == 15 &&
              std::fabs(res.objective - (-2.0)) < 1e-6 && sec < 1.0;
  std::ostringstream detail;
  detail << "nodes=" << res.stats.nodes << ", objective=" << res.objective
         << ", " << sec << "s";
  report("depth-first-emulation-15-nodes", pass, detail.str());
}

void fixture_scripted_shaping() {
  SolveConfig cfg;
  cfg.dive_direction = DiveDirection::kUp;
  cfg.dive_variable_hook = lowest_index_fractional;
  auto script = std::make_shared<std::deque<int>>(std::deque<int>{0, 1, 2, 0});
  cfg.offshoot_choice_hook =
      [script](const Offshoot&) -> std::optional<ScriptedChoice> {
    if (script->empty()) return std::nullopt;
    int var = script->front();
    script->pop_front();
    return ScriptedChoice{var, false};
  };
  std::vector<SearchEvent> events;
  cfg.event_sink = [&](const SearchEvent& e) { events.push_back(e); };
  Search s(example1_problem(), cfg);
  SolveResult res = s.run();

  struct Expected {
    NodeAction action;
    int offshoot, parent;
    NodeOutcome outcome;
    double objective;
  };
  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<Expected> expect = {
      {NodeAction::kRoot, 0, -1, NodeOutcome::kFractional, -23.0 / 3.0},
      {NodeAction::kDive, 0, -1, NodeOutcome::kFractional, -6.5},
      {NodeAction::kDive, 0, -1, NodeOutcome::kFractional, -4.0},
      {NodeAction::kDive, 0, -1, NodeOutcome::kInfeasible, nan},
      {NodeAction::kTop, -1, 0, NodeOutcome::kInfeasible, nan},
      {NodeAction::kTop, 1, 0, NodeOutcome::kFractional, -17.0 / 3.0},
      {NodeAction::kDive, 1, -1, NodeOutcome::kInfeasible, nan},
      {NodeAction::kTop, -1, 0, NodeOutcome::kIntegral, -2.0},
      {NodeAction::kTop, -1, 1, NodeOutcome::kInfeasible, nan},
  };
  bool pass = res.status == SolveStatus::kOptimal && res.stats.nodes == 9 &&
              std::fabs(res.objective - (-2.0)) < 1e-6 &&
              res.incumbent_node == 8 && events.size() == expect.size();
  int mismatches = 0;
  if (pass) {
    for (size_t i = 0; i < expect.size(); ++i) {
      const SearchEvent& e = events[i];
      const Expected& x = expect[i];
      bool ok = e.node == static_cast<long>(i + 1) && e.action == x.action &&
                e.offshoot_id == x.offshoot && e.parent_offshoot_id == x.parent &&
                e.outcome == x.outcome &&
                (std::isnan(x.objective) ? std::isnan(e.objective)
                                         : std::fabs(e.objective - x.objective) < 1e-6);
      if (!ok) ++mismatches;
    }
    pass = mismatches == 0;
  }
  std::ostringstream detail;
  detail << "nodes=" << res.stats.nodes << ", incumbent at node "
         << res.incumbent_node << ", trace mismatches=" << mismatches;
  report("scripted-shaping-9-node-trace", pass, detail.str());
}

struct CorpusTally {
  long runs = 0;
  long objective_mismatches = 0;
  long trim_audits = 0;
  long trim_audit_failures = 0;
  double max_gap = 0.0;
};

// shared corpus scan: oracle equivalence + trim audits + offshoot harvest
void oracle_equivalence_and_trims(
    std::vector<Offshoot>* harvested, std::vector<double>* harvest_cutoffs,
    std::vector<const MilpProblem*>* harvest_sources,
    std::vector<std::unique_ptr<MilpProblem>>* corpus_storage) {
  const Strategy strategies[] = {Strategy::kBottom, Strategy::kTop,
                                 Strategy::kPseudo, Strategy::kPseudoDual};
  const std::optional<int> depths[] = {std::optional<int>(0),
                                       std::optional<int>(4), std::nullopt};
  const BoundingMethod boundings[] = {
      BoundingMethod::kOff, BoundingMethod::kReducedCostStep,
      BoundingMethod::kDualEvaluation, BoundingMethod::kResolve};

  CorpusTally tally;
  auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < 500; ++i) {
    corpus_storage->push_back(
        std::make_unique<MilpProblem>(corpus_instance(i)));
    const MilpProblem& p = *corpus_storage->back();
    OracleResult truth = enumerate_optimum(p);
    for (Strategy strat : strategies) {
      for (bool trim : {true, false}) {
        for (const auto& depth : depths) {
          for (BoundingMethod bounding : boundings) {
            SolveConfig cfg;
            cfg.strategy = strat;
            cfg.trim = trim;
            cfg.max_dive_depth = depth;
            cfg.bounding = bounding;
            bool harvest = harvested->size() < 1000 &&
                           strat == Strategy::kPseudoDual && trim && !depth &&
                           bounding == BoundingMethod::kReducedCostStep;
            if (harvest) {
              cfg.offshoot_created_hook = [&](const Offshoot& o, double cutoff) {
                if (o.terminal == TerminalKind::kOpen) return;
                if (harvested->size() >= 1000) return;
                harvested->push_back(o);
                harvest_cutoffs->push_back(cutoff);
                harvest_sources->push_back(&p);
              };
            }
            Search s(p, cfg);
            SolveResult res = s.run();
            ++tally.runs;
            tally.trim_audits += res.stats.trim_audits;
            tally.trim_audit_failures += res.stats.trim_audit_failures;
            if (truth.feasible) {
              double gap = res.status == SolveStatus::kOptimal
                               ? std::fabs(res.objective - truth.objective)
                               : kInf;
              tally.max_gap = std::max(tally.max_gap, gap);
              if (!(res.status == SolveStatus::kOptimal && gap < 1e-6))
                ++tally.objective_mismatches;
            } else if (res.status != SolveStatus::kInfeasible) {
              ++tally.objective_mismatches;
            }
          }
        }
      }
    }
  }
  // top up the offshoot harvest beyond the matrix corpus if needed
  for (int i = 500; harvested->size() < 1000 && i < 3000; ++i) {
    corpus_storage->push_back(std::make_unique<MilpProblem>(corpus_instance(i)));
    const MilpProblem& p = *corpus_storage->back();
    SolveConfig cfg;
    cfg.offshoot_created_hook = [&](const Offshoot& o, double cutoff) {
      if (o.terminal == TerminalKind::kOpen) return;
      if (harvested->size() >= 1000) return;
      harvested->push_back(o);
      harvest_cutoffs->push_back(cutoff);
      harvest_sources->push_back(&p);
    };
    Search s(p, cfg);
    SolveResult res = s.run();
    tally.trim_audits += res.stats.trim_audits;
    tally.trim_audit_failures += res.stats.trim_audit_failures;
  }

  double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             start).count();
  {
    std::ostringstream detail;
    detail << tally.runs << " runs over 500 instances x 96 configs, max gap="
           << tally.max_gap << ", " << sec << "s";
    report("oracle-equivalence-500x96", tally.objective_mismatches == 0,
           detail.str());
  }
  {
    std::ostringstream detail;
    detail << tally.trim_audits << " trim events audited, "
           << tally.trim_audit_failures << " violations";
    report("trim-soundness", tally.trim_audit_failures == 0 && tally.trim_audits > 0,
           detail.str());
  }
}

void dive_permutation_invariance(const std::vector<Offshoot>& harvested,
                                 const std::vector<double>& cutoffs,
                                 const std::vector<const MilpProblem*>& sources) {
  std::mt19937_64 rng(42);
  long checked = 0, violations = 0;
  for (size_t k = 0; k < harvested.size(); ++k) {
    const MilpProblem& p = *sources[k];
    LpModel lp = p.to_lp();
    DualSimplex solver(lp);
    std::vector<double> lo = p.lower, hi = p.upper;
    apply_changes(harvested[k].top_changes, lo, hi);
    solver.set_bounds(lo, hi);
    solver.reset_basis();
    LpOutcome out = solver.solve();
    std::vector<BoundChange> dive = harvested[k].dive_changes;
    std::shuffle(dive.begin(), dive.end(), rng);
    for (const BoundChange& c : dive) {
      solver.change_bound(c.var, c.side,
                          c.side == BoundSide::kLower
                              ? std::max(c.value, lo[c.var])
                              : std::min(c.value, hi[c.var]));
      out = solver.solve();
    }
    bool prunable = lp_infeasible(out.status) ||
                    (out.status == LpStatus::kOptimal &&
                     out.objective >= cutoffs[k] - tol::kCutoff);
    ++checked;
    if (!prunable) ++violations;
  }
  std::ostringstream detail;
  detail << checked << " offshoots shuffled and re-solved, " << violations
         << " violations";
  report("dive-permutation-invariance", checked >= 1000 && violations == 0,
         detail.str());
}

void bounding_sanity() {
  long events = 0, violations = 0;
  double max_excess = 0.0;
  for (int i = 0; events < 500 && i < 4000; ++i) {
    MilpProblem p = corpus_instance(i);
    SolveConfig cfg;
    cfg.strategy = Strategy::kTop;  // every branch is a top branch
    cfg.bounding = BoundingMethod::kResolve;
    cfg.bounding_audit_hook = [&](double m1, double m2, double m3) {
      if (events >= 500) return;
      ++events;
      double excess = std::max(m1 - m3, m2 - m3);
      max_excess = std::max(max_excess, excess);
      if (m1 > m3 + 1e-6 || m2 > m3 + 1e-6) ++violations;
    };
    Search s(p, cfg);
    s.run();
  }
  std::ostringstream detail;
  detail << events << " top-branch events, max excess over the exact bound="
         << max_excess;
  report("bounding-sanity", events >= 500 && violations == 0, detail.str());
}

void hotstart_equivalence() {
  long compared = 0, mismatches = 0;
  std::mt19937_64 rng(7);
  for (std::uint64_t seed = 20000; compared < 1000; ++seed) {
    GeneratorProfile prof;
    prof.continuous_fraction = seed % 4 == 0 ? 0.3 : 0.0;
    prof.ensure_feasible = seed % 5 != 0;
    MilpProblem p = generate_random(seed, 2 + seed % 11, 1 + seed % 10, prof);
    LpModel lp = p.to_lp();
    LpOutcome base = solve_from_scratch(lp, p.lower, p.upper);
    if (base.status != LpStatus::kOptimal) continue;
    std::uniform_int_distribution<int> pick_var(0, p.num_vars() - 1);
    int var = pick_var(rng);
    BoundChangeSpec change;
    change.var = var;
    bool raise = rng() % 2 == 0;
    if (p.integral[var]) {
      change.side = raise ? BoundSide::kLower : BoundSide::kUpper;
      change.value = raise ? 1.0 : 0.0;
    } else {
      change.side = raise ? BoundSide::kLower : BoundSide::kUpper;
      change.value = 0.5 * (p.lower[var] + p.upper[var]);
    }
    LpOutcome hot = hotstart_solve(lp, base.basis, p.lower, p.upper, change);
    std::vector<double> lo = p.lower, hi = p.upper;
    if (change.side == BoundSide::kLower) lo[var] = change.value;
    else hi[var] = change.value;
    LpOutcome scratch = solve_from_scratch(lp, lo, hi);
    ++compared;
    bool ok = lp_infeasible(hot.status) == lp_infeasible(scratch.status);
    if (ok && hot.status == LpStatus::kOptimal)
      ok = std::fabs(hot.objective - scratch.objective) < 1e-6;
    if (!ok) ++mismatches;
  }
  std::ostringstream detail;
  detail << compared << " bound-change resolves, " << mismatches << " mismatches";
  report("hotstart-equivalence", mismatches == 0, detail.str());
}

void compare_harness() {
  std::vector<MilpProblem> instances;
  for (int i = 0; i < 60; ++i) instances.push_back(corpus_instance(9000 + i));

  std::vector<NamedConfig> configs;
  for (Strategy strat : {Strategy::kBottom, Strategy::kTop, Strategy::kPseudo,
                         Strategy::kPseudoDual}) {
    NamedConfig nc;
    nc.name = to_string(strat);
    nc.config.strategy = strat;
    configs.push_back(std::move(nc));
  }
  NamedConfig depth0;
  depth0.name = "depth0";
  depth0.config.max_dive_depth = 0;
  configs.push_back(std::move(depth0));

  CompareOptions opt;
  opt.metric = CompareMetric::kNodes;  // deterministic at desk scale
  CompareResult res = run_compare(instances, configs, opt);

  bool curves_valid = !res.profile.taus.empty();
  for (const auto& curve : res.profile.rho) {
    double prev = 0.0;
    for (double v : curve) {
      if (v < prev - 1e-12 || v < 0.0 || v > 1.0) curves_valid = false;
      prev = v;
    }
    if (!curve.empty() && curve.front() < 0.0) curves_valid = false;
  }
  std::string csv = profile_csv(res.profile);
  bool pass = curves_valid && res.divergences == 0 &&
              csv.rfind("tau,bottom,top,pseudo,pseudodual,depth0", 0) == 0 &&
              res.profile.instances == 60;
  std::ostringstream detail;
  detail << configs.size() << " configs x " << res.profile.instances
         << " instances, " << res.profile.taus.size() << " profile breakpoints, "
         << res.divergences << " divergences; geomean node ratios:";
  for (size_t k = 0; k < res.profile.labels.size(); ++k) {
    std::ostringstream v;
    v.precision(3);
    v << res.profile.geometric_mean[k];
    detail << " " << res.profile.labels[k] << "=" << v.str();
  }
  report("compare-harness-profiles", pass, detail.str());
}

}  // namespace

int main() {
  fixture_depth_first();
  fixture_scripted_shaping();

  std::vector<Offshoot> harvested;
  std::vector<double> harvest_cutoffs;
  std::vector<const MilpProblem*> harvest_sources;
  std::vector<std::unique_ptr<MilpProblem>> corpus_storage;
  oracle_equivalence_and_trims(&harvested, &harvest_cutoffs, &harvest_sources,
                               &corpus_storage);
  dive_permutation_invariance(harvested, harvest_cutoffs, harvest_sources);
  bounding_sanity();
  hotstart_equivalence();
  compare_harness();

  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
