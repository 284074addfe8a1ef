#include "osbb/pseudocost.hpp"

#include <algorithm>

#include "osbb/common.hpp"

namespace osbb {

namespace {
constexpr double kScoreFloor = 1e-6;
}

PseudocostStore::PseudocostStore(int num_vars, int reliability_limit)
    : entries_(2 * std::max(num_vars, 0)), reliability_limit_(reliability_limit) {}

void PseudocostStore::update(int var, bool up, double objective_degradation,
                             double fractional_distance) {
  if (fractional_distance <= tol::kZero) return;  // division guard
  double deg = std::max(objective_degradation, 0.0);
  Entry& e = entry(var, up);
  e.sum += deg / fractional_distance;
  e.count += 1;
}

double PseudocostStore::unit_cost(int var, bool up) const {
  const Entry& e = entry(var, up);
  return e.count == 0 ? 0.0 : e.sum / e.count;
}

int PseudocostStore::count(int var, bool up) const { return entry(var, up).count; }

bool PseudocostStore::entry_reliable(int var, bool up) const {
  return entry(var, up).count >= reliability_limit_;
}

bool PseudocostStore::reliable(int var) const {
  return entry_reliable(var, false) && entry_reliable(var, true);
}

double PseudocostStore::score(int var, double frac) const {
  double f = frac;
  if (f < tol::kIntegral || f > 1.0 - tol::kIntegral) f = 0.5;
  double down = unit_cost(var, false) * f;
  double up = unit_cost(var, true) * (1.0 - f);
  return std::max(down, kScoreFloor) * std::max(up, kScoreFloor);
}

}  // namespace osbb
