#pragma once

// Independent oracle for Gamma and the normalized functions
//   lambda_c(z) = z^(-c) Gamma(z) / (sqrt(2 pi) z^(z-1/2) e^(-z)),
//   nu_c(z)     = z^(-c) Gamma(z+1/2) / (sqrt(2 pi) z^z e^(-z)).
// Nothing here uses Borel-plane or asymptotic-series machinery.

#include "resurgence/errors.hpp"

namespace resurgence {

struct GammaValue {
  Complex value;
  double est_error = 0.0;  // relative
};

/// log Gamma(z) on some branch (only its exponential is meaningful).
/// Throws DomainError at the poles z = 0, -1, -2, ...
Complex log_gamma_ref(Complex z);

/// Gamma(z) via a 14-term Lanczos approximation (g = 671/128), with upward
/// recurrence for Re z < 1/2.
GammaValue gamma_ref(Complex z);

/// lambda_c(z), principal branches of z^(z-1/2) and z^(-c); z off (-inf, 0].
Complex lambda_ref(Complex z, Complex c = 0.0);

/// nu_c(z), principal branches; z off (-inf, 0].
Complex nu_ref(Complex z, Complex c = 0.0);

/// |Gamma(z) Gamma(1-z) sin(pi z) / pi - 1|.
double reflection_check(Complex z);

}  // namespace resurgence
