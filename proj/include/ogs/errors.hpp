#pragma once

#include <stdexcept>
#include <string>

namespace ogs {

// Bad user-facing parameters (dimension mismatch, gcd precondition, malformed text).
struct invalid_argument_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A configured size ceiling would be exceeded.
struct size_limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two routes that must agree disagreed; indicates a bug, not bad input.
struct internal_fault : std::logic_error {
  using std::logic_error::logic_error;
};

} // namespace ogs
