#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hfpt {

/// Raised when an operation's precondition on its (mathematical) input fails.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The Frobenius oracle refused a computation that would exceed its size budget.
class BudgetExceeded : public DomainError {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t limiting_q)
      : DomainError(what), limiting_q_(limiting_q) {}

  std::uint64_t limiting_q() const noexcept { return limiting_q_; }

 private:
  std::uint64_t limiting_q_;
};

}  // namespace hfpt
