#pragma once

#include <stdexcept>
#include <string>

namespace qmask {

/// Base class for every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix shapes do not fit the operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A scalar parameter lies outside its admissible range.
class DomainError : public Error {
 public:
  using Error::Error;
};

class NotHermitianError : public Error {
 public:
  using Error::Error;
};

class NotUnitaryError : public Error {
 public:
  using Error::Error;
};

/// Iterative routine hit its iteration cap.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Density matrix or pure state violates its validity invariants.
class InvalidStateError : public Error {
 public:
  using Error::Error;
};

/// A routine's stated precondition does not hold for its inputs. Distinct
/// from a routine that ran and reported a negative result.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace qmask
