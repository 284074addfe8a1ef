#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace osbb {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Shared numeric tolerances. The instances this solver targets are small and
// well conditioned, so these are plain double-precision simplex settings.
namespace tol {
inline constexpr double kFeas = 1e-7;      // primal bound/row feasibility
inline constexpr double kDual = 1e-7;      // reduced-cost sign test
inline constexpr double kZero = 1e-9;      // pivot rejection / numeric zero
inline constexpr double kIntegral = 1e-6;  // integrality of LP values
inline constexpr double kCutoff = 1e-9;    // prune margin, incumbent improvement
inline constexpr double kObjective = 1e-6; // objective equality in checks
}  // namespace tol

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input could not be parsed; line numbers are 1-based.
struct ParseError : Error {
  int line;
  ParseError(const std::string& what, int line_no)
      : Error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

// A documented precondition was violated by the caller.
struct ContractViolation : Error {
  using Error::Error;
};

}  // namespace osbb
