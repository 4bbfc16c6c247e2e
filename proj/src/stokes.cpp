#include "resurgence/stokes.hpp"

#include <cmath>
#include <numbers>

#include "resurgence/reference.hpp"

namespace resurgence {

namespace {

using std::numbers::pi;

// Gamma(z) from lambda(z) = Gamma(z) / (sqrt(2 pi) z^{z-1/2} e^{-z}).
Complex gamma_from_lambda(Complex z, Complex lambda) {
  return std::sqrt(2.0 * pi) * std::exp((z - 0.5) * std::log(z) - z) * lambda;
}

}  // namespace

StokesRecord stokes_record(Complex z, const QuadratureSpec& spec) {
  const double a = std::arg(z);
  if (!(a > -pi && a < 0.0)) throw DomainError("stokes: needs -pi < arg z < 0");
  if (std::abs(z.imag()) < 1e-3) throw DomainError("stokes: z within 1e-3 of the real axis");

  StokesRecord rec;
  rec.z = z;
  // Middles of the admissible sub-intervals on each side of pi/2.
  rec.theta1 = -a / 2.0;
  rec.theta2 = (pi - a) / 2.0;
  const BorelFunction f = BorelFunction::make(BorelKind::minor_lambda_3_2);
  const LaplaceResult r1 = laplace_ray(f, Direction{rec.theta1}, z, spec);
  const LaplaceResult r2 = laplace_ray(f, Direction{rec.theta2}, z, spec);
  rec.l1 = r1.value;
  rec.l2 = r2.value;
  rec.est_error = r1.est_error + r2.est_error;
  rec.panels = r1.panels + r2.panels;
  rec.factor = 1.0 - std::exp(Complex(0.0, -2.0 * pi) * z);
  rec.identity_residual = std::abs(rec.l1 * rec.factor - rec.l2) / std::abs(rec.l2);

  const Complex w = -z;  // e^{i pi} z, principal argument in (0, pi)
  const Complex lambda_z = std::exp(1.5 * std::log(z)) * rec.l1;
  const Complex lambda_w = Complex(0.0, -1.0) / (std::exp(1.5 * std::log(w)) * rec.l2);
  const Complex g_z = gamma_from_lambda(z, lambda_z);
  const Complex g_1mz = w * gamma_from_lambda(w, lambda_w);
  rec.reflection_residual = std::abs(g_z * g_1mz * std::sin(pi * z) / pi - 1.0);

  const Complex ref = std::exp(-1.5 * std::log(z)) * lambda_ref(z);
  rec.oracle_error = std::abs(rec.l1 - ref) / std::abs(ref);
  return rec;
}

}  // namespace resurgence
