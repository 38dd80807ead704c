#pragma once

#include <stdexcept>
#include <string>

namespace sumsetlab {

/// Malformed or inconsistent input (bad file, space mismatch, empty operand).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size guard would be exceeded. `guard()` names it.
class GuardError : public std::runtime_error {
 public:
  GuardError(std::string guard, const std::string& what)
      : std::runtime_error(what), guard_(std::move(guard)) {}
  const std::string& guard() const noexcept { return guard_; }

 private:
  std::string guard_;
};

/// Arguments outside the mathematical domain of a formula.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace sumsetlab
