#pragma once

#include <stdexcept>
#include <string>

namespace gencat {

/// Precondition violated by the caller (bad parameter, value outside a domain).
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Exhaustive enumeration requested above the configured cap.
class CapExceeded : public DomainError {
public:
  CapExceeded(const std::string& what, int cap)
      : DomainError(what + ": enumeration cap " + std::to_string(cap) + " exceeded"), cap_(cap) {}
  int cap() const noexcept { return cap_; }

private:
  int cap_;
};

/// Evaluation point lies on a branch cut.
class CutError : public DomainError {
public:
  using DomainError::DomainError;
};

/// Evaluation point too close to a pole.
class PoleError : public DomainError {
public:
  using DomainError::DomainError;
};

/// Internal numeric failure: non-convergence, or an identity that must hold did not.
class NumericError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace gencat
