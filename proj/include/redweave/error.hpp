#pragma once

#include <stdexcept>
#include <string>

namespace redweave {

/// Malformed or out-of-range user input (CLI exit status 1).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computed structure broke one of its own invariants; this is a bug
/// (CLI exit status 2).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Enumeration refused because it would exceed the configured budget
/// (CLI exit status 3).
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace redweave
