#pragma once

#include <stdexcept>
#include <string>

namespace expsum {

struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct PrecisionExhausted : std::runtime_error {
  explicit PrecisionExhausted(const std::string& what)
      : std::runtime_error(what) {}
};

// Raised when an interval comparison cannot be decided at the current
// precision; the caller is expected to refine and retry.
struct Indeterminate : std::runtime_error {
  explicit Indeterminate(const std::string& what) : std::runtime_error(what) {}
};

struct BudgetExhausted : std::runtime_error {
  explicit BudgetExhausted(const std::string& what)
      : std::runtime_error(what) {}
};

struct ConvergenceFailure : std::runtime_error {
  explicit ConvergenceFailure(const std::string& what)
      : std::runtime_error(what) {}
};

struct UnknownCheck : std::runtime_error {
  explicit UnknownCheck(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace expsum
