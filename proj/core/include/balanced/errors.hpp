#pragma once

#include <stdexcept>
#include <string>

namespace balanced {

/// Malformed caller input: bad document, out-of-range index, dimension
/// mismatch, violated precondition.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration exceeded its configured budget. Partial results are
/// discarded; callers must either raise the budget or shrink the input.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace balanced
