#include "resurgence/laplace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace resurgence {

namespace {

using std::numbers::pi;

double tail_bound(double kappa, GrowthCertificate g, double r) {
  return std::exp(-kappa * r) * ((g.A * r + g.B) / kappa + g.A / (kappa * kappa));
}

RayFunction shared_ray(std::shared_ptr<RayEvaluator> ev) {
  return [ev](double r) { return (*ev)(r); };
}

// int over H_{theta_h} of exp(s z xi) f(xi) d xi, s = -1 or +1.
LaplaceResult hankel_integral(const MajorProvider& f, double theta_h, double theta_report, double s, Complex z,
                              const QuadratureSpec& spec) {
  spec.validate();
  const Complex e = std::polar(1.0, theta_h);
  const double kappa = -s * (z * e).real();
  if (!(kappa > 0.0)) throw DomainError("Hankel Laplace: z outside the half-plane of the contour direction");
  const double delta = spec.hankel_delta;
  GrowthCertificate g = f.growth();
  g.A *= 2.0;
  g.B *= 2.0;
  const double R = std::max(truncation_radius(kappa, g, 0.5 * spec.abs_tol, spec.max_radius), delta);

  LaplaceResult out;
  out.z = z;
  out.theta = theta_report;
  out.truncation_radius = R;

  const RayFunction arc = f.on_arc(delta, theta_h - 2.0 * pi, theta_h);
  const auto circle = [&](double phi) {
    const Complex xi = std::polar(delta, phi);
    return std::exp(s * z * xi) * arc(phi) * Complex(0.0, 1.0) * xi;
  };
  QuadratureResult q = integrate(circle, theta_h - 2.0 * pi, theta_h, spec.rel_tol, 0.25 * spec.abs_tol,
                                 spec.max_subdivisions);
  if (R > delta) {
    const RayFunction hi = f.on_ray(theta_h, R);
    const RayFunction lo = f.on_ray(theta_h - 2.0 * pi, R);
    const auto ray = [&](double r) { return std::exp(s * z * r * e) * (hi(r) - lo(r)) * e; };
    q += integrate(ray, delta, R, spec.rel_tol, 0.25 * spec.abs_tol, spec.max_subdivisions);
  }
  out.value = q.value;
  out.est_error = q.est_error + tail_bound(kappa, g, R);
  out.panels = q.panels;
  return out;
}

LaplaceResult ray_integral(const std::function<RayFunction(double)>& make_ray, Direction d, Complex z,
                           const QuadratureSpec& spec, GrowthCertificate g) {
  spec.validate();
  const Complex e = std::polar(1.0, d.theta);
  const Complex zeta = z * e;
  const double kappa = zeta.real();
  if (!(kappa > 0.0)) throw DomainError("laplace_ray: Re(z e^{i theta}) must be positive");
  const double R = truncation_radius(kappa, g, 0.5 * spec.abs_tol, spec.max_radius);
  const RayFunction f = make_ray(R);

  LaplaceResult out;
  out.z = z;
  out.theta = d.theta;
  out.truncation_radius = R;
  // r = t^2 on [0, min(1, R)] absorbs the square-root behaviour at 0.
  const double r1 = std::min(1.0, R);
  const auto near = [&](double t) {
    const double r = t * t;
    return std::exp(-zeta * r) * f(r) * (2.0 * t) * e;
  };
  QuadratureResult q = integrate(near, 0.0, std::sqrt(r1), spec.rel_tol, 0.25 * spec.abs_tol, spec.max_subdivisions);
  if (R > r1) {
    const auto far = [&](double r) { return std::exp(-zeta * r) * f(r) * e; };
    q += integrate(far, r1, R, spec.rel_tol, 0.25 * spec.abs_tol, spec.max_subdivisions);
  }
  out.value = q.value;
  out.est_error = q.est_error + tail_bound(kappa, g, R);
  out.panels = q.panels;
  return out;
}

}  // namespace

bool HalfPlane::contains(Complex z) const {
  if (z == Complex(0.0, 0.0)) return false;
  return std::abs(std::remainder(std::arg(z) + theta, 2.0 * pi)) < pi / 2.0 &&
         (z * std::polar(1.0, theta)).real() > tau;
}

GrowthCertificate growth_certificate(BorelKind kind) {
  switch (kind) {
    case BorelKind::minor_mu: return {0.0, 1.0};
    default: return {1.0, 3.0};
  }
}

double truncation_radius(double kappa, GrowthCertificate g, double abs_tol, double max_radius) {
  if (!(kappa > 0.0)) throw DomainError("truncation_radius: kappa must be positive");
  if (tail_bound(kappa, g, 0.0) <= abs_tol) return 0.0;
  if (tail_bound(kappa, g, max_radius) > abs_tol) {
    throw QuadratureError("tail bound " + std::to_string(abs_tol) + " unattainable within max_radius " +
                          std::to_string(max_radius) + " (Re(z e^{i theta}) = " + std::to_string(kappa) + ")");
  }
  double lo = 0.0, hi = max_radius;
  for (int it = 0; it < 200 && hi - lo > 1e-10 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (tail_bound(kappa, g, mid) > abs_tol ? lo : hi) = mid;
  }
  return hi;
}

HalfPlane certified_half_plane(Direction d, GrowthCertificate g, const QuadratureSpec& spec) {
  spec.validate();
  double lo = 1e-12, hi = 1.0;
  while (tail_bound(hi, g, spec.max_radius) > 0.5 * spec.abs_tol) hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (tail_bound(mid, g, spec.max_radius) > 0.5 * spec.abs_tol ? lo : hi) = mid;
  }
  return {d.theta, hi};
}

LaplaceResult laplace_ray(const RayFunction& minor, Direction d, Complex z, const QuadratureSpec& spec,
                          GrowthCertificate g) {
  return ray_integral([&](double) { return minor; }, d, z, spec, g);
}

LaplaceResult laplace_ray(const BorelFunction& minor, Direction d, Complex z, const QuadratureSpec& spec) {
  if (minor.is_major()) throw DomainError("laplace_ray needs a minor; use laplace_hankel for majors");
  return ray_integral(
      [&](double R) { return shared_ray(std::make_shared<RayEvaluator>(minor, d.theta, std::max(R, 1e-3))); }, d,
      z, spec, growth_certificate(minor.kind));
}

RayFunction MajorProvider::on_ray(double theta, double) const {
  return [this, theta](double r) { return at({r, theta}); };
}

RayFunction MajorProvider::on_arc(double radius, double, double) const {
  return [this, radius](double phi) { return at({radius, phi}); };
}

Complex BorelMajor::at(SurfacePoint xi) const { return evaluate(f_, xi); }

RayFunction BorelMajor::on_ray(double theta, double r_max) const {
  return shared_ray(std::make_shared<RayEvaluator>(f_, theta, r_max));
}

RayFunction BorelMajor::on_arc(double radius, double phi0, double phi1) const {
  auto ev = std::make_shared<ArcEvaluator>(f_, radius, phi0, phi1);
  return [ev](double phi) { return (*ev)(phi); };
}

MonomialMajor::MonomialMajor(Complex c) : c_(c) {
  if (c.imag() != 0.0 || c.real() > 2.0) {
    throw DomainError("MonomialMajor: only real c <= 2 carry a growth certificate");
  }
  const double cr = c.real();
  integer_ = cr > 0.0 && cr == std::floor(cr);
  if (integer_) {
    norm_ = 1.0 / (std::tgamma(cr) * Complex(0.0, 2.0 * pi));
  } else {
    if (cr <= 0.0 && cr == std::floor(cr)) throw DomainError("MonomialMajor: c must not be a non-positive integer");
    norm_ = 1.0 / ((1.0 - std::exp(Complex(0.0, -2.0 * pi * cr))) * std::tgamma(cr));
  }
}

Complex MonomialMajor::at(SurfacePoint xi) const {
  const Complex log_xi(std::log(xi.r), xi.theta);
  const Complex power = std::exp((c_ - 1.0) * log_xi);
  return integer_ ? norm_ * power * log_xi : norm_ * power;
}

GrowthCertificate MonomialMajor::growth() const {
  // Valid on rays with r >= 0.05.
  const double n = std::abs(norm_);
  return {2.0 * n, n * (40.0 + 4.0 * pi)};
}

LaplaceResult laplace_hankel(const MajorProvider& major, Direction d, Complex z, const QuadratureSpec& spec) {
  return hankel_integral(major, d.theta, d.theta, -1.0, z, spec);
}

LaplaceResult laplace_real_major(const MajorProvider& rmajor, Direction d, Complex z, const QuadratureSpec& spec) {
  LaplaceResult r = hankel_integral(rmajor, d.theta + pi, d.theta, 1.0, z, spec);
  const Complex two_pi_i(0.0, 2.0 * pi);
  r.value /= two_pi_i;
  r.est_error /= 2.0 * pi;
  return r;
}

GlueReport glue_directions(const std::vector<std::pair<Direction, Complex>>& results, double rel_tol) {
  GlueReport rep;
  for (std::size_t i = 0; i < results.size(); ++i) {
    for (std::size_t j = i + 1; j < results.size(); ++j) {
      const Complex a = results[i].second, b = results[j].second;
      const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
      const double mm = std::abs(a - b) / scale;
      if (mm > rep.max_mismatch) {
        rep.max_mismatch = mm;
        rep.theta_a = results[i].first.theta;
        rep.theta_b = results[j].first.theta;
      }
    }
  }
  rep.consistent = rep.max_mismatch <= 10.0 * rel_tol;
  return rep;
}

SectorLaplace::SectorLaplace(BorelFunction minor, double lo, double hi, QuadratureSpec spec)
    : f_(minor), lo_(lo), hi_(hi), spec_(spec) {
  if (!(lo <= hi)) throw DomainError("SectorLaplace: empty interval");
}

double SectorLaplace::direction_for(Complex z) const { return std::clamp(-std::arg(z), lo_, hi_); }

LaplaceResult SectorLaplace::operator()(Complex z) const {
  return laplace_ray(f_, Direction{direction_for(z)}, z, spec_);
}

}  // namespace resurgence
