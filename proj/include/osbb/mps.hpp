#pragma once

#include <string>

#include "osbb/problem.hpp"

namespace osbb {

// Reads the MPS subset NAME / OBJSENSE / ROWS / COLUMNS (with INTORG/INTEND
// markers) / RHS / BOUNDS / ENDATA, fixed or free format. RANGES is rejected.
// Integer columns default to bounds [0, +inf); BV sets [0, 1].
// Throws ParseError with a 1-based line number on malformed input.
MilpProblem parse_mps(const std::string& text);

}  // namespace osbb
