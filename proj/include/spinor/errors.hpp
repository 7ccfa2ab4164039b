#pragma once

#include <stdexcept>
#include <string>

namespace spinor {

// Malformed or out-of-range arguments.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Arguments are well-formed but violate a mathematical precondition.
struct PreconditionError : std::domain_error {
  using std::domain_error::domain_error;
};

// A construction or solve produced something with the wrong shape
// (singular system, reducible module, ...).
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Floating point pipeline failed; carries the parameter value where it broke.
struct NumericError : std::runtime_error {
  NumericError(const std::string& what, double t)
      : std::runtime_error(what + " (t=" + std::to_string(t) + ")"), at(t) {}
  double at;
};

}  // namespace spinor
