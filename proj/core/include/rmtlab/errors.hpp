#pragma once

#include <stdexcept>
#include <string>

namespace rmtlab {

// Error taxonomy shared across the library. The CLI maps these onto exit
// codes: usage/parameter 2, input/parse 3, numeric 4.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid argument values (non-positive shape, replicates < 1, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Operation asked for outside its mathematical domain (beta != 2 constants,
// condition number of a spectrum touching zero, p <= n test data).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed or inconsistent input objects (non-Hermitian matrix, mismatched
// spectrum/parameters, empty sample).
class InputError : public Error {
 public:
  using Error::Error;
};

// File-level parsing failure; message carries row/column location.
class ParseError : public InputError {
 public:
  using InputError::InputError;
};

// Numerical failure (eigensolver non-convergence, ODE step underflow,
// convolution mass defect).
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace rmtlab
