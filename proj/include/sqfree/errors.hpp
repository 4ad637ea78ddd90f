#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sqfree {

/// Raised when a caller violates a documented precondition, such as asking
/// whether a word containing a square is bifurcate.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A search ran out of its node (or path, or backtrack) budget before it
/// could reach a verdict. The verdict is indeterminate, not false.
class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted(const std::string& what, std::uint64_t spent)
      : std::runtime_error(what), spent_(spent) {}

  std::uint64_t spent() const noexcept { return spent_; }

 private:
  std::uint64_t spent_;
};

}  // namespace sqfree
