#include "osbb/random_instance.hpp"

#include <random>

namespace osbb {

MilpProblem generate_random(std::uint64_t seed, int n_vars, int n_rows,
                            const GeneratorProfile& profile) {
  if (n_vars < 1) throw ContractViolation("generate_random: need at least one variable");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto coef = [&]() {
    std::uniform_int_distribution<int> dist(profile.coef_min, profile.coef_max);
    int v = 0;
    while (v == 0) v = dist(rng);
    return static_cast<double>(v);
  };

  MilpProblem p;
  p.name = "rand-s" + std::to_string(seed) + "-v" + std::to_string(n_vars) +
           "-r" + std::to_string(n_rows);
  for (int i = 0; i < n_vars; ++i) {
    bool continuous = unit(rng) < profile.continuous_fraction;
    p.var_names.push_back("x" + std::to_string(i + 1));
    p.integral.push_back(!continuous);
    p.lower.push_back(0.0);
    p.upper.push_back(continuous ? 10.0 : 1.0);
    p.objective.push_back(coef());
  }

  // anchor point used to keep anchored rows satisfiable
  std::vector<double> anchor(n_vars, 0.0);
  for (int i = 0; i < n_vars; ++i)
    anchor[i] = p.integral[i] ? std::floor(unit(rng) * 2.0) : 5.0;

  for (int r = 0; r < n_rows; ++r) {
    ProblemRow row;
    for (int i = 0; i < n_vars; ++i)
      if (unit(rng) < profile.density) row.coef.push_back({i, coef()});
    if (row.coef.empty()) {
      std::uniform_int_distribution<int> pick(0, n_vars - 1);
      row.coef.push_back({pick(rng), coef()});
    }
    row.sense = unit(rng) < 0.5 ? RowSense::kLe : RowSense::kGe;
    double activity = 0.0;
    for (auto [j, a] : row.coef) activity += a * anchor[j];
    if (profile.ensure_feasible) {
      std::uniform_int_distribution<int> slack(0, profile.rhs_slack_max);
      double s = slack(rng);
      row.rhs = row.sense == RowSense::kLe ? activity + s : activity - s;
    } else {
      std::uniform_int_distribution<int> rhs(-10, 10);
      row.rhs = rhs(rng);
    }
    p.rows.push_back(std::move(row));
  }
  p.validate();
  return p;
}

}  // namespace osbb
