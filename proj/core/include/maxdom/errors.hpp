#pragma once

#include <stdexcept>
#include <string>

namespace maxdom {

/// Malformed arguments: out-of-range indices, k > n, a >= b, objects off the line, ...
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive or per-box enumeration would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied solver or witness broke the contract it promised to honour.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace maxdom
