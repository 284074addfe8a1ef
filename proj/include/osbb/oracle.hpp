#pragma once

#include "osbb/problem.hpp"

namespace osbb {

struct OracleResult {
  bool feasible = false;
  double objective = kInf;
  std::vector<double> point;        // argmin over the enumeration order
  long assignments_evaluated = 0;   // product of integer domain sizes
};

// Brute-force reference: enumerates every integral assignment of the integer
// variables in lexicographic order from the lower bounds. Pure-integer
// assignments are checked directly against the rows; mixed instances solve
// one LP over the continuous variables per assignment. Intentionally naive.
//
// Throws ContractViolation if an integer variable is unbounded or the
// domain product exceeds 2^20.
OracleResult enumerate_optimum(const MilpProblem& problem);

}  // namespace osbb
