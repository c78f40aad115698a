#pragma once

#include <stdexcept>
#include <string>

namespace mutlab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input failed a structural check (shape, range, invariant).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A fixed-width integer operation would have wrapped.
class OverflowError : public Error {
 public:
  using Error::Error;
};

class NotSkewSymmetrizable : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class SignCoherenceViolation : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class IndexOutOfRange : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotAcyclic : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NonIntegralPairing : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class CompanionMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class PatternMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Raised by exhaustive procedures that hit their configured cap.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class CycleBudgetExceeded : public BudgetExceeded {
 public:
  using BudgetExceeded::BudgetExceeded;
};

class SearchBudgetExceeded : public BudgetExceeded {
 public:
  using BudgetExceeded::BudgetExceeded;
};

class FrontierBudgetExceeded : public BudgetExceeded {
 public:
  using BudgetExceeded::BudgetExceeded;
};

}  // namespace mutlab
