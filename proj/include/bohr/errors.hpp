#pragma once

#include <stdexcept>
#include <string>

namespace bohr {

// Argument outside the mathematical domain of an operation (r >= 1, alpha
// outside [0,1), N < 1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A truncated summation hit its term cap before its certified tail bound
// dropped below the requested tolerance.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A functional needs a profile channel (or a variant) that is not available.
class UnsupportedCombination : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A profile violates the coefficient bounds of the class.
class ProfileError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The residual never became non-negative on the scan range.
class NoSignChange : public SolverError {
 public:
  using SolverError::SolverError;
};

// The residual is already non-negative at the first scan point.
class NonNegativeStart : public SolverError {
 public:
  using SolverError::SolverError;
};

class UnknownTable : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace bohr
