#pragma once

// Lateral Laplace sums of the lambda_{3/2} minor on either side of the
// singular direction pi/2 and the reflection formula they encode:
//
//   L1(z) = L2(z) / (1 - e^{-2 pi i z}),   L2(z) = -i / lambda_{-3/2}(e^{i pi} z).

#include "resurgence/laplace.hpp"

namespace resurgence {

struct StokesRecord {
  Complex z;
  double theta1 = 0.0, theta2 = 0.0;
  Complex l1, l2;
  Complex factor;  // 1 - e^{-2 pi i z}
  double identity_residual = 0.0;
  /// |Gamma(z) Gamma(1-z) sin(pi z) / pi - 1| with both Gamma values rebuilt
  /// from l1 and l2.
  double reflection_residual = 0.0;
  /// |l1 - z^{-3/2} lambda_ref(z)| / |z^{-3/2} lambda_ref(z)|.
  double oracle_error = 0.0;
  double est_error = 0.0;
  int panels = 0;
};

/// Needs -pi < arg z < 0 and |Im z| >= 1e-3 (DomainError otherwise).
StokesRecord stokes_record(Complex z, const QuadratureSpec& spec);

}  // namespace resurgence
