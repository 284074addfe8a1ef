#pragma once

#include <string>

#include "osbb/problem.hpp"

namespace osbb {

// Instance JSON schema: top-level keys name, sense, objective[],
// rows[{coefs:{var:val}, sense, rhs}], vars[{name, lb, ub, integral}].
// lb/ub may be null for an infinite bound; a missing lb defaults to 0 and a
// missing ub to +inf. sense "max" is converted to minimization on read.
MilpProblem problem_from_json(const std::string& text);
std::string problem_to_json(const MilpProblem& problem);

}  // namespace osbb
