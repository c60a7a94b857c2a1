#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ssg {

// Raised when a caller breaks an operation's precondition.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Division by zero in the coefficient field.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Exponent or degree does not fit the fixed-width representation.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// A runtime self-check of the signature engine failed. `label()` names the
// property that was violated.
class InvariantViolation : public std::runtime_error {
 public:
  InvariantViolation(std::string label, const std::string& detail)
      : std::runtime_error(label + ": " + detail), label_(std::move(label)) {}

  const std::string& label() const { return label_; }

 private:
  std::string label_;
};

}  // namespace ssg
