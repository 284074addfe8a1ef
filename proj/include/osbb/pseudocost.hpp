#pragma once

#include <vector>

namespace osbb {

// Per-variable, per-direction history of objective degradation per unit of
// fractional distance. An entry is reliable once it has enough observations;
// a variable is reliable when both directions are.
class PseudocostStore {
 public:
  explicit PseudocostStore(int num_vars, int reliability_limit = 5);

  // degradation is clamped at zero; updates with a vanishing fractional
  // distance are skipped.
  void update(int var, bool up, double objective_degradation,
              double fractional_distance);

  double unit_cost(int var, bool up) const;  // 0 until the first observation
  int count(int var, bool up) const;
  bool entry_reliable(int var, bool up) const;
  bool reliable(int var) const;

  // Product score of the estimated up/down degradations at the given
  // fractional value. Integral fractions score with distance 0.5 per side.
  double score(int var, double frac) const;

  int reliability_limit() const { return reliability_limit_; }

 private:
  struct Entry {
    double sum = 0.0;
    int count = 0;
  };
  const Entry& entry(int var, bool up) const { return entries_[2 * var + (up ? 1 : 0)]; }
  Entry& entry(int var, bool up) { return entries_[2 * var + (up ? 1 : 0)]; }

  std::vector<Entry> entries_;
  int reliability_limit_;
};

}  // namespace osbb
