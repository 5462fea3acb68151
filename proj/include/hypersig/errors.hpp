#pragma once

#include <stdexcept>
#include <string>

namespace hypersig {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed user input: bad JSON, non-square matrix, alpha outside (0,1), ...
class InputError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

// A monodromy eigenvalue lies off the unit circle where the operation needs
// every eigenvalue on it.
class OffCircleError : public Error {
 public:
  using Error::Error;
};

// Numerical decision could not be certified at the working precision.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

// Signature data inconsistent with a spectrum (non-integral or negative
// multiplicities).
class CalibrationError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace hypersig
