#pragma once

#include <chrono>
#include <optional>

#include "osbb/branching.hpp"
#include "osbb/event_log.hpp"
#include "osbb/problem.hpp"

namespace osbb {

// Top-bound strengthening after branching from the top, in increasing order
// of effort: a reduced-cost step on the branched variable, a full dual
// evaluation of the child solution at the parent box, or an exact resolve
// warmstarted from the child basis.
enum class BoundingMethod : std::uint8_t {
  kOff = 0,
  kReducedCostStep = 1,
  kDualEvaluation = 2,
  kResolve = 3,
};

struct ScriptedChoice {
  int var = -1;
  bool from_top = false;
};

struct SolveConfig {
  Strategy strategy = Strategy::kPseudoDual;
  std::optional<int> max_dive_depth;  // no value = unlimited; 0 degenerates to
                                      // plain best-bound branch-and-bound
  bool trim = true;
  BoundingMethod bounding = BoundingMethod::kReducedCostStep;
  int split_threshold = 64;           // dives at 2x this length get split
  DiveDirection dive_direction = DiveDirection::kRound;
  NodeSelection node_selection = NodeSelection::kBestBound;
  std::optional<double> time_limit_sec;
  std::optional<long> node_limit;
  unsigned seed = 0;                  // recorded in fingerprints only
  bool audit_trims = true;            // re-solve F u D after every trim
  int reliability_limit = 5;
  int strong_branch_candidates = 10;

  // Observation / scripting hooks. All optional; used by tests and the
  // harness, never required for solving.
  std::function<void(const SearchEvent&)> event_sink;
  std::function<int(const DiveContext&)> dive_variable_hook;
  std::function<std::optional<ScriptedChoice>(const Offshoot&)> offshoot_choice_hook;
  std::function<void(const Offshoot&, double cutoff)> offshoot_created_hook;
  std::function<void(double m1, double m2, double m3)> bounding_audit_hook;
  std::function<void(double parent_bound, const LpOutcome& child, bool from_top)>
      child_top_hook;
};

struct SearchStats {
  long nodes = 0;            // LP-processed nodes
  long lp_solves = 0;        // nodes plus probes, audits, resolves
  long lp_iterations = 0;
  long offshoots = 0;        // offshoot ids allocated
  long trims = 0;            // trim calls that removed at least one change
  long trim_removed = 0;
  long trim_audits = 0;
  long trim_audit_failures = 0;
  long prunes_by_bound = 0;  // pool entries dropped against the cutoff
  long strong_branch_lps = 0;
  long bounding_lps = 0;
  long split_lps = 0;
  long incumbents = 0;
  double wall_time_sec = 0.0;
};

enum class SolveStatus : std::uint8_t { kOptimal, kInfeasible, kLimit };
const char* to_string(SolveStatus s);

struct SolveResult {
  SolveStatus status = SolveStatus::kLimit;
  double objective = kInf;         // minimization form
  std::vector<double> best_point;
  bool proven = false;             // the open-offshoot pool was emptied
  long incumbent_node = -1;
  SearchStats stats;
};

// The offshoot-based branch-and-bound search. One instance per solve; not
// thread safe. Parallelism belongs across instances, never inside one search.
//
// The building blocks (dive, branch_bottom, branch_top, trim_offshoot,
// update_cutoff, strengthen_top_bound, split_offshoot, plunge) are public so
// they can be exercised directly; run() composes them.
class Search {
 public:
  explicit Search(const MilpProblem& problem, SolveConfig config = {});

  SolveResult run();

  // Solves the node reached from the global box by `changes`, counting it as
  // an LP-processed node. Throws on the iteration safeguard.
  LpOutcome solve_node(const std::vector<BoundChange>& changes, const Basis* warm);

  // Dives from the just-solved node `state` (the solver must hold that
  // state, as after solve_node on the shoot's top changes). Fills the
  // shoot's dive set and terminal information; a depth-limited stop pushes
  // the unfinished bottom node into the pool as an open node.
  void dive(Offshoot& shoot, LpOutcome state, int max_changes);

  // Branching. Both return the new offshoot's top change set and mutate the
  // parent (the chosen change leaves D; branch_top moves it into F).
  std::vector<BoundChange> branch_bottom(Offshoot& parent, int dive_index);
  std::vector<BoundChange> branch_top(Offshoot& parent, int dive_index);

  // Lazy trim against the current cutoff: applies the larger reduction of
  // the dual-information rule and bottom pruning, then dedups repeated
  // same-side changes. Returns the number of removed changes.
  int trim_offshoot(Offshoot& shoot);

  // Registers an integral feasible point. Returns true if the cutoff
  // improved (pool purged). Throws ContractViolation on an invalid point.
  bool update_cutoff(const std::vector<double>& point, double objective,
                     long node_id);

  Offshoot* select_offshoot();

  // After a top branch: recompute the parent's top bound with the given
  // method using the just-solved child top. Returns the new bound.
  double strengthen_top_bound(Offshoot& parent, const LpOutcome& child_top,
                              int branched_var,
                              const std::vector<BoundChange>& child_changes,
                              BoundingMethod method);

  // Splits an undisturbed offshoot at dive position k (first k changes stay
  // on top). The bottom top node is re-solved for a trustworthy bound.
  std::pair<Offshoot, Offshoot> split_offshoot(const Offshoot& shoot, int k);

  // Fixes every integer variable of the node to its rounded LP value at
  // once, solves a single LP, and registers the incumbent when one appears.
  // Returns the fixing changes and the outcome.
  std::pair<std::vector<BoundChange>, LpOutcome> plunge(
      const std::vector<BoundChange>& node_changes, const LpOutcome& node_state);

  const LpModel& lp() const { return lp_; }
  const MilpProblem& problem() const { return problem_; }
  double cutoff() const { return cutoff_; }
  const Incumbent& incumbent() const { return incumbent_; }
  const SearchStats& stats() const { return stats_; }
  OffshootPool& pool() { return pool_; }
  PseudocostStore& pseudocosts() { return store_; }
  long processed_nodes() const { return stats_.nodes; }
  bool node_integral(const std::vector<double>& x) const;
  void box_for(const std::vector<BoundChange>& changes, std::vector<double>* lo,
               std::vector<double>* hi) const;

 private:
  struct LimitReached {};

  int alloc_id();
  double elapsed() const;
  LpOutcome lp_solve_counted();
  LpOutcome quiet_solve(const std::vector<BoundChange>& changes, const Basis* warm,
                        long* counter);
  NodeOutcome classify(const LpOutcome& out, double cutoff_before) const;
  void emit(NodeAction action, int offshoot_id, int parent_id,
            const LpOutcome& out, double cutoff_before);
  DiveChoice choose_dive_variable(const LpOutcome& state);
  void expand_open_node(Offshoot& entry);
  void step_offshoot(Offshoot& entry);
  void finalize_insert(Offshoot&& shoot);
  void insert_with_split(Offshoot&& shoot);
  void audit_trim(const Offshoot& shoot);
  SolveResult finish(SolveStatus status, bool proven);

  MilpProblem problem_;
  SolveConfig cfg_;
  LpModel lp_;
  DualSimplex solver_;   // node processing (live hotstart state)
  DualSimplex aux_;      // audits, bounding resolves, split resolves
  PseudocostStore store_;
  std::vector<bool> integral_;
  OffshootPool pool_;
  Incumbent incumbent_;
  double cutoff_ = kInf;
  SearchStats stats_;
  long node_counter_ = 0;
  int next_offshoot_id_ = 0;
  long dive_lp_count_ = 0;
  long dive_lp_iter_sum_ = 0;
  std::vector<double> box_lo_, box_hi_;  // working box mirror of solver_
  std::chrono::steady_clock::time_point start_time_;
};

}  // namespace osbb
