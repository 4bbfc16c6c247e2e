#pragma once

// Directional Laplace transforms of minors, Hankel-contour transforms of
// majors and the real-major transform.
//
//   laplace_ray:        int_0^{e^{i theta} inf} e^{-z xi} minor(xi) d xi
//   laplace_hankel:     int over H_theta of e^{-z xi} major(xi) d xi
//   laplace_real_major: (1 / 2 pi i) int over H_{theta+pi} of e^{z xi} rmajor(xi) d xi
//
// H_theta comes in from e^{i(theta - 2 pi)} inf, turns anticlockwise around 0
// on the circle |xi| = hankel_delta and leaves along e^{i theta} inf.
// Infinite rays are truncated at the radius where the growth certificate
// |f(xi)| <= A |xi| + B bounds the tail by abs_tol.

#include <functional>
#include <memory>
#include <vector>

#include "resurgence/borel_plane.hpp"
#include "resurgence/quadrature.hpp"

namespace resurgence {

struct Direction {
  double theta = 0.0;
};

/// Pi^theta_tau = { |arg z + theta| < pi/2, Re(z e^{i theta}) > tau }.
struct HalfPlane {
  double theta = 0.0;
  double tau = 0.0;
  bool contains(Complex z) const;
};

/// |f(r e^{i theta})| <= A r + B on the integration rays.
struct GrowthCertificate {
  double A = 1.0;
  double B = 3.0;
};

GrowthCertificate growth_certificate(BorelKind kind);

/// Smallest R with e^{-kappa R} ((A R + B)/kappa + A/kappa^2) <= abs_tol.
/// Throws QuadratureError when R would exceed max_radius, DomainError for kappa <= 0.
double truncation_radius(double kappa, GrowthCertificate g, double abs_tol, double max_radius);

/// A tau for which every z in Pi^theta_tau meets the tail bound within max_radius.
HalfPlane certified_half_plane(Direction d, GrowthCertificate g, const QuadratureSpec& spec);

struct LaplaceResult {
  Complex z;
  double theta = 0.0;
  Complex value;
  double est_error = 0.0;
  int panels = 0;
  double truncation_radius = 0.0;
};

/// f(r e^{i theta}) as a function of r > 0.
using RayFunction = std::function<Complex(double)>;

LaplaceResult laplace_ray(const RayFunction& minor, Direction d, Complex z, const QuadratureSpec& spec,
                          GrowthCertificate g);
LaplaceResult laplace_ray(const BorelFunction& minor, Direction d, Complex z, const QuadratureSpec& spec);

/// A function on the xi-surface that the Hankel transforms can sample.
class MajorProvider {
 public:
  virtual ~MajorProvider() = default;
  virtual Complex at(SurfacePoint xi) const = 0;
  /// r -> value at r e^{i theta}, 0 < r <= r_max.
  virtual RayFunction on_ray(double theta, double r_max) const;
  /// phi -> value at radius e^{i phi} for phi between phi0 and phi1.
  virtual RayFunction on_arc(double radius, double phi0, double phi1) const;
  virtual GrowthCertificate growth() const { return {}; }
};

/// Natural-major (or minor) from the Borel plane evaluators.
class BorelMajor : public MajorProvider {
 public:
  explicit BorelMajor(BorelFunction f) : f_(f) {}
  Complex at(SurfacePoint xi) const override;
  RayFunction on_ray(double theta, double r_max) const override;
  RayFunction on_arc(double radius, double phi0, double phi1) const override;
  GrowthCertificate growth() const override { return growth_certificate(f_.kind); }

 private:
  BorelFunction f_;
};

/// Monomial natural-major I_c(xi) = xi^{c-1} / ((1 - e^{-2 pi i c}) Gamma(c)),
/// or xi^{c-1} log(xi) / ((c-1)! 2 pi i) for c = 1, 2, ...
class MonomialMajor : public MajorProvider {
 public:
  explicit MonomialMajor(Complex c);
  Complex at(SurfacePoint xi) const override;
  GrowthCertificate growth() const override;

 private:
  Complex c_;
  bool integer_;
  Complex norm_;
};

/// Adapter for an arbitrary function on the surface.
class SurfaceFunction : public MajorProvider {
 public:
  SurfaceFunction(std::function<Complex(SurfacePoint)> f, GrowthCertificate g) : f_(std::move(f)), g_(g) {}
  Complex at(SurfacePoint xi) const override { return f_(xi); }
  GrowthCertificate growth() const override { return g_; }

 private:
  std::function<Complex(SurfacePoint)> f_;
  GrowthCertificate g_;
};

LaplaceResult laplace_hankel(const MajorProvider& major, Direction d, Complex z, const QuadratureSpec& spec);
LaplaceResult laplace_real_major(const MajorProvider& rmajor, Direction d, Complex z, const QuadratureSpec& spec);

struct GlueReport {
  bool consistent = true;
  /// Largest pairwise |a - b| / max(|a|, |b|).
  double max_mismatch = 0.0;
  /// Directions of the pair with the largest mismatch.
  double theta_a = 0.0, theta_b = 0.0;
};

/// Pairwise consistency of Laplace values at one z; a mismatch above
/// 10 rel_tol flags a Stokes jump between the directions.
GlueReport glue_directions(const std::vector<std::pair<Direction, Complex>>& results, double rel_tol);

/// Sector evaluator on D^I: Laplace along the direction of [lo, hi] with
/// the largest Re(z e^{i theta}).
class SectorLaplace {
 public:
  SectorLaplace(BorelFunction minor, double lo, double hi, QuadratureSpec spec);
  LaplaceResult operator()(Complex z) const;
  double direction_for(Complex z) const;

 private:
  BorelFunction f_;
  double lo_, hi_;
  QuadratureSpec spec_;
};

}  // namespace resurgence
