#pragma once

#include <stdexcept>
#include <string>

namespace simconj {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not conform (non-square trace, mismatched tuples, ...).
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Arithmetic between values of different field kinds.
class KindMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Inverse requested for a matrix that is singular (exactly, or at tolerance).
class SingularMatrix : public Error {
 public:
  SingularMatrix() : Error("singular matrix") {}
};

/// Word enumeration or grid search would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Eigen solver input is not symmetric / Hermitian.
class NotSymmetric : public Error {
 public:
  using Error::Error;
};

class NotPositiveDefinite : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A coefficient passed to the matrix-unit embedding does not commute with the units.
class NonCentralCoefficient : public Error {
 public:
  using Error::Error;
};

/// The requested combination of field and involution has no implemented construction.
class Unsupported : public Error {
 public:
  using Error::Error;
};

}  // namespace simconj
