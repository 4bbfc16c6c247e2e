#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace resurgence {

using Complex = std::complex<double>;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation point too close to a singular point of the Borel plane.
class ProximityError : public Error {
 public:
  ProximityError(const std::string& what, Complex singular_point)
      : Error(what), singular_point_(singular_point) {}
  Complex singular_point() const { return singular_point_; }

 private:
  Complex singular_point_;
};

/// An iteration ran out of budget. Carries the last iterate and its residual.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, Complex last_iterate, double residual)
      : Error(what), last_iterate_(last_iterate), residual_(residual) {}
  Complex last_iterate() const { return last_iterate_; }
  double residual() const { return residual_; }

 private:
  Complex last_iterate_;
  double residual_;
};

/// Quadrature could not meet its tolerance or tail bound.
class QuadratureError : public Error {
 public:
  using Error::Error;
};

/// Continuation along a path failed (root collision, malformed path, lost branch).
class TrackingError : public Error {
 public:
  using Error::Error;
};

}  // namespace resurgence
