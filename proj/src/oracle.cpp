#include "osbb/oracle.hpp"

#include <cmath>

#include "osbb/lp_solver.hpp"

namespace osbb {

namespace {
constexpr long kMaxAssignments = 1L << 20;

bool satisfies_rows(const MilpProblem& p, const std::vector<double>& x) {
  for (const ProblemRow& row : p.rows) {
    double act = 0.0;
    for (auto [j, a] : row.coef) act += a * x[j];
    switch (row.sense) {
      case RowSense::kLe:
        if (act > row.rhs + tol::kFeas) return false;
        break;
      case RowSense::kGe:
        if (act < row.rhs - tol::kFeas) return false;
        break;
      case RowSense::kEq:
        if (std::fabs(act - row.rhs) > tol::kFeas) return false;
        break;
    }
  }
  return true;
}
}  // namespace

OracleResult enumerate_optimum(const MilpProblem& problem) {
  problem.validate();
  const int n = problem.num_vars();
  std::vector<int> int_vars;
  long combos = 1;
  for (int i = 0; i < n; ++i) {
    if (!problem.integral[i]) continue;
    if (problem.lower[i] == -kInf || problem.upper[i] == kInf)
      throw ContractViolation("oracle requires box-bounded integer variables");
    long size =
        static_cast<long>(std::floor(problem.upper[i] + tol::kIntegral) -
                          std::ceil(problem.lower[i] - tol::kIntegral)) + 1;
    if (size < 1) size = 0;
    int_vars.push_back(i);
    combos *= std::max(size, 1L);
    if (combos > kMaxAssignments)
      throw ContractViolation("oracle refuses: more than 2^20 assignments");
    if (size == 0) combos = 0;
  }
  if (combos == 0) return {};  // an integer domain is empty

  bool mixed = !problem.pure_integer();
  LpModel lp;
  if (mixed) lp = problem.to_lp();

  OracleResult best;
  std::vector<double> x(n, 0.0);
  std::vector<long> idx(int_vars.size(), 0);
  std::vector<double> base(int_vars.size(), 0.0);
  for (size_t k = 0; k < int_vars.size(); ++k)
    base[k] = std::ceil(problem.lower[int_vars[k]] - tol::kIntegral);

  for (long count = 0; count < combos; ++count) {
    for (size_t k = 0; k < int_vars.size(); ++k)
      x[int_vars[k]] = base[k] + static_cast<double>(idx[k]);
    ++best.assignments_evaluated;

    if (!mixed) {
      if (satisfies_rows(problem, x)) {
        double obj = problem.objective_offset;
        for (int i = 0; i < n; ++i) obj += problem.objective[i] * x[i];
        if (!best.feasible || obj < best.objective - tol::kZero) {
          best.feasible = true;
          best.objective = obj;
          best.point = x;
        }
      }
    } else {
      std::vector<double> lo = problem.lower, hi = problem.upper;
      for (int i : int_vars) lo[i] = hi[i] = x[i];
      LpOutcome out = solve_from_scratch(lp, lo, hi);
      if (out.status == LpStatus::kOptimal &&
          (!best.feasible || out.objective < best.objective - tol::kZero)) {
        best.feasible = true;
        best.objective = out.objective;
        best.point = out.primal;
      }
    }

    // lexicographic increment from the last position
    for (int k = static_cast<int>(int_vars.size()) - 1; k >= 0; --k) {
      int var = int_vars[k];
      long size = static_cast<long>(std::floor(problem.upper[var] + tol::kIntegral) -
                                    base[k]) + 1;
      if (++idx[k] < size) break;
      idx[k] = 0;
    }
  }
  return best;
}

}  // namespace osbb
