// zermelo - error types shared across the library
#pragma once

#include <stdexcept>
#include <string>

namespace zermelo {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad usage or configuration: wrong vector length, nonpositive sample
// count, invalid parameter. Maps to CLI exit code 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Jet division by a jet whose constant term is zero.
class SingularJetError : public Error {
 public:
  using Error::Error;
};

// Math domain violation: sqrt of a nonpositive constant term, Laplacian at
// the puncture of u_a, and similar.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Navigation data requested at a point with |W|^2 >= 1.
class OutsideDomainError : public Error {
 public:
  using Error::Error;
};

// Flag (y, V) with Gram determinant below the degeneracy threshold.
class DegenerateFlagError : public Error {
 public:
  using Error::Error;
};

// A matrix that must be positive definite failed its Cholesky factorization.
// Should never trigger for the metrics handled here; treated as test failure.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace zermelo
