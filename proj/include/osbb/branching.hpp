#pragma once

#include <functional>
#include <optional>

#include "osbb/offshoot.hpp"
#include "osbb/pseudocost.hpp"

namespace osbb {

enum class Strategy : std::uint8_t { kBottom, kTop, kPseudo, kPseudoDual };
enum class DiveDirection : std::uint8_t { kRound, kUp, kDown };

const char* to_string(Strategy s);
bool strategy_from_string(const std::string& text, Strategy* out);

// Solves one strong-branching child LP (var pushed up or down) under an
// iteration cap and reverts; provided by the search engine.
using ProbeFn = std::function<LpOutcome(int var, bool up, int iteration_cap)>;

struct DiveChoice {
  int var = -1;
  bool up = false;
  bool forced = false;  // the opposite side was proven infeasible
};

struct DiveContext {
  const std::vector<double>& x;        // node primal
  const std::vector<bool>& integral;   // per variable
  const std::vector<double>& lower;    // working box
  const std::vector<double>& upper;
  double node_objective = 0.0;
};

// Reliability branching over the fractional integer variables. Candidates are
// capped by most-fractional preorder; unreliable ones are strong-branched
// through `probe` (results recorded as pseudocost observations). Returns
// nullopt when the node is integral. A probe that proves one side infeasible
// forces the opposite bound change immediately.
std::optional<DiveChoice> select_dive_variable(
    const DiveContext& ctx, PseudocostStore& store, const ProbeFn& probe,
    int probe_iteration_cap, DiveDirection direction, int candidate_cap = 10);

struct StrategyChoice {
  int dive_index = -1;  // index into offshoot.dive_changes
  bool from_top = false;
};

// Offshoot-variable selection:
//   bottom      last unprocessed change, branch from the bottom
//   top         first unprocessed change, branch from the top
//   pseudo      best reliable pseudocost score from the top, else the worst
//               pseudocost score from the bottom
//   pseudodual  like pseudo, but the fallback takes the worst |dual info|
// "Worst" is the smallest value; ties go to the lowest variable index.
StrategyChoice select_offshoot_variable(const Offshoot& shoot, Strategy strategy,
                                        const PseudocostStore& store);

// Fraction of v past its floor, with values snapped to the working box.
double fractional_part(double v);
bool is_fractional(double v);

}  // namespace osbb
