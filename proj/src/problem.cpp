#include "osbb/problem.hpp"

#include <cmath>
#include <set>

namespace osbb {

const char* to_string(RowSense s) {
  switch (s) {
    case RowSense::kLe: return "<=";
    case RowSense::kGe: return ">=";
    case RowSense::kEq: return "=";
  }
  return "?";
}

bool MilpProblem::pure_integer() const {
  for (bool b : integral)
    if (!b) return false;
  return true;
}

bool MilpProblem::has_unbounded_integer() const {
  for (int i = 0; i < num_vars(); ++i)
    if (integral[i] && (lower[i] == -kInf || upper[i] == kInf)) return true;
  return false;
}

void MilpProblem::validate() const {
  int n = num_vars();
  if (static_cast<int>(var_names.size()) != n ||
      static_cast<int>(lower.size()) != n ||
      static_cast<int>(upper.size()) != n ||
      static_cast<int>(integral.size()) != n) {
    throw Error("problem '" + name + "': inconsistent variable arrays");
  }
  if (n == 0) throw Error("problem '" + name + "': no variables");
  std::set<std::string> seen;
  for (int i = 0; i < n; ++i) {
    if (!seen.insert(var_names[i]).second)
      throw Error("duplicate variable name '" + var_names[i] + "'");
    if (std::isnan(objective[i]) || std::isinf(objective[i]))
      throw Error("non-finite objective coefficient on '" + var_names[i] + "'");
    if (std::isnan(lower[i]) || std::isnan(upper[i]))
      throw Error("NaN bound on '" + var_names[i] + "'");
    if (lower[i] > upper[i] + tol::kZero)
      throw Error("lower bound exceeds upper bound on '" + var_names[i] + "'");
  }
  for (size_t r = 0; r < rows.size(); ++r) {
    const ProblemRow& row = rows[r];
    if (std::isnan(row.rhs) || std::isinf(row.rhs))
      throw Error("non-finite rhs in row " + std::to_string(r));
    int prev = -1;
    for (auto [j, a] : row.coef) {
      if (j < 0 || j >= n) throw Error("bad column index in row " + std::to_string(r));
      if (j <= prev) throw Error("unsorted or duplicate column in row " + std::to_string(r));
      prev = j;
      if (std::isnan(a) || std::isinf(a))
        throw Error("non-finite coefficient in row " + std::to_string(r));
    }
  }
}

LpModel MilpProblem::to_lp() const {
  LpModel lp;
  lp.num_vars = num_vars();
  lp.cost = objective;
  lp.cost_offset = objective_offset;
  lp.lower = lower;
  lp.upper = upper;
  for (const ProblemRow& row : rows) {
    if (row.sense == RowSense::kGe || row.sense == RowSense::kEq) {
      SparseRow r;
      r.coef = row.coef;
      r.rhs = row.rhs;
      lp.rows.push_back(std::move(r));
    }
    if (row.sense == RowSense::kLe || row.sense == RowSense::kEq) {
      SparseRow r;
      r.coef = row.coef;
      for (auto& [j, a] : r.coef) a = -a;
      r.rhs = -row.rhs;
      lp.rows.push_back(std::move(r));
    }
  }
  return lp;
}

}  // namespace osbb
