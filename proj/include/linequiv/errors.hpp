#pragma once

#include <stdexcept>
#include <string>

namespace linequiv {

// Invalid parameters or inputs that violate an operation's preconditions.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured size cap (group order, brute-force search space) was exceeded.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Integer result does not fit the fixed-width output type.
class Overflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// An internal cross-check failed. Indicates a bug, never bad input.
class VerificationFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace linequiv
