#pragma once

#include <stdexcept>
#include <string>

namespace halving {

/// Base class for every mathematical precondition failure raised by the library.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class SingularCurve : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotOnCurve : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The requested computation needs a number field larger than Q.
class UnsupportedOverQ : public DomainError {
 public:
  using DomainError::DomainError;
};

class ContextMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

class BudgetExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace halving
