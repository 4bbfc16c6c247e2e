#pragma once

// Real-majors of lambda_c and nu_c as integrals over a Q-path:
//
//   rho_lambda_c(xi) = Gamma(3/2 - c) / sqrt(2 pi) int (xi + e^Q - Q - 1)^(c - 3/2) dQ,
//   rho_nu_c(xi)     = Gamma(3/2 - c) / sqrt(2 pi) int (xi + e^Q - Q - 1)^(c - 3/2) e^(Q/2) dQ,
//
// the path running from -inf to +inf. For xi off (-inf, 0] the path is the
// real line; for Re xi < 0 it is bent around the two real roots of
// e^Q - Q - 1 = -Re xi, on the side that keeps Im(xi + e^Q - Q - 1) of the
// sign of Im xi. Analytic continuation in xi deforms the path so that it
// never meets the moving roots of xi + e^Q - Q - 1 = 0.
//
// The power is continuous along the path, starting from its positive-real
// determination at Q -> +inf.

#include <vector>

#include "resurgence/laplace.hpp"
#include "resurgence/quadrature.hpp"

namespace resurgence {

enum class RealMajorKind { lambda, nu };

/// Piecewise-linear Q-path between real end nodes; the tails beyond the
/// first and last node run along the real axis. `tail_T` is the truncation
/// point of the right tail used by the last evaluation.
struct QPath {
  std::vector<Complex> nodes;
  double tail_T = 0.0;
};

struct RealMajorResult {
  Complex value;
  double est_error = 0.0;
  int panels = 0;
  int qpath_nodes = 0;
};

/// Real roots Q- < 0 < Q+ of e^Q - Q - 1 = s for s > 0.
std::pair<double, double> real_roots(double s);

/// Integral over an explicit path (branch continued from the right end).
RealMajorResult rho_on_path(RealMajorKind kind, Complex c, Complex xi, const QPath& path, const QuadratureSpec& spec);

/// Path for xi on the principal sheet; `side` (+1 / -1) selects the limit
/// from above / below when xi is on the negative real axis.
QPath principal_qpath(Complex xi, int side, double left, double right);

/// Re c < 1/2, xi off (-inf, 0].
RealMajorResult rho_lambda_c(Complex c, Complex xi, const QuadratureSpec& spec);
/// Boundary value at xi = s e^{i pi side}, s > 0, side = +1 or -1.
RealMajorResult rho_lambda_c_axis(Complex c, double s, int side, const QuadratureSpec& spec);
/// Re c < 1, xi off (-inf, 0].
RealMajorResult rho_nu_c(Complex c, Complex xi, const QuadratureSpec& spec);

/// Analytic continuation of rho_lambda_c along the polyline path_xi, which
/// starts off (-inf, 0], keeps |xi| <= 12 and avoids the eps-disks around
/// 2 pi i Z. Throws TrackingError when roots collide or the path deformation
/// would sweep over a root. `final_path` receives the deformed Q-path.
RealMajorResult rho_continue(Complex c, const std::vector<Complex>& path_xi, const QuadratureSpec& spec,
                             QPath* final_path = nullptr);

/// Polyline approximation of the arc r e^{i phi}, phi from phi0 to phi1.
std::vector<Complex> arc_path(double r, double phi0, double phi1, double max_step = 0.05);

/// Closed xi-path from 1 along |xi| = 1 to arg `sheet_arg` (an odd
/// multiple of pi/2 pointing at +i), up the imaginary axis to (2 pi - 1) i,
/// once anticlockwise around 2 pi i at radius 1, and back the same way.
std::vector<Complex> loop_around_2pi_i(double sheet_arg);

/// lambda_1 minor by the contour integral
///   1 / (2 pi i sqrt 2) oint (-xi + e^Q - Q - 1)^(-1/2) e^Q dQ
/// over a circle enclosing both roots of e^Q - Q - 1 = xi; |xi| < 2.
Complex minor_lambda1_contour(Complex xi, const QuadratureSpec& spec);

/// rho_lambda_c on the surface, for the real-major Laplace transform.
/// Arguments in (-pi, pi) use the real line, +-pi the axis limits, and
/// larger ones continuation along an arc from arg 0.
class RhoMajor : public MajorProvider {
 public:
  RhoMajor(Complex c, QuadratureSpec spec);
  Complex at(SurfacePoint xi) const override;
  GrowthCertificate growth() const override;

 private:
  Complex c_;
  QuadratureSpec spec_;
};

}  // namespace resurgence
