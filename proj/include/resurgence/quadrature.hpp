#pragma once

#include <functional>
#include <span>

#include "resurgence/errors.hpp"

namespace resurgence {

/// Tolerances and limits shared by every Laplace and contour integral.
struct QuadratureSpec {
  double rel_tol = 1e-12;
  double abs_tol = 1e-15;
  /// Hard cap on the truncation radius of infinite rays.
  double max_radius = 400.0;
  /// Radius of the circle of Hankel contours; must stay below 2 pi.
  double hankel_delta = 1.0;
  int max_subdivisions = 4000;

  /// Throws DomainError when the invariants above are violated.
  void validate() const;
};

struct QuadratureResult {
  Complex value;
  double est_error = 0.0;
  int panels = 0;

  QuadratureResult& operator+=(const QuadratureResult& o) {
    value += o.value;
    est_error += o.est_error;
    panels += o.panels;
    return *this;
  }
};

using RealToComplex = std::function<Complex(double)>;

/// Globally adaptive 7/15-point Gauss-Kronrod quadrature of f over [a, b].
///
/// Panels are summed in left-to-right order with compensated summation, so
/// the result is reproducible bit-for-bit for fixed inputs. Stops when the
/// estimated error is below max(abs_tol, rel_tol |I|, 50 eps int |f|); throws QuadratureError
/// after `max_subdivisions` panels.
QuadratureResult integrate(const RealToComplex& f, double a, double b, double rel_tol,
                           double abs_tol, int max_subdivisions);

/// Compensated (Neumaier) sum.
Complex stable_sum(std::span<const Complex> terms);

}  // namespace resurgence
