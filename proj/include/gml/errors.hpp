// Copyright 2026 The gml Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GML_ERRORS_HPP
#define GML_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace gml {

/// Base type for every error thrown by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of the operation.
class DomainError : public Error {
public:
  using Error::Error;
};

/// An argument is outside the supported parameter range (e.g. too large).
class RangeError : public Error {
public:
  using Error::Error;
};

/// Vector/matrix dimensions do not match.
class ShapeError : public Error {
public:
  using Error::Error;
};

/// A matrix is singular or rank-deficient where full rank is required.
class RankError : public Error {
public:
  using Error::Error;
};

/// An index set is malformed (duplicates, out of range, empty, ...).
class IndexError : public Error {
public:
  using Error::Error;
};

/// A stated precondition does not hold (e.g. an invalid root bracket).
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// A series was detected to diverge.
class DivergenceError : public Error {
public:
  using Error::Error;
};

/// Something that should be impossible happened (e.g. a rejection loop
/// exceeding its proposal cap).
class InternalError : public Error {
public:
  using Error::Error;
};

/// An iterative scheme failed to reach the requested tolerance. Carries the
/// best estimate obtained so far together with its error estimate.
class ConvergenceError : public Error {
public:
  ConvergenceError(const std::string& what, std::complex<double> best,
                   double error_estimate)
      : Error(what), best_(best), error_(error_estimate) {}

  std::complex<double> best_estimate() const { return best_; }
  double best_estimate_real() const { return best_.real(); }
  double error_estimate() const { return error_; }

private:
  std::complex<double> best_;
  double error_;
};

}  // namespace gml

#endif  // GML_ERRORS_HPP
