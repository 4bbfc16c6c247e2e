#pragma once

// Borel-plane minors and natural-majors of lambda_{3/2}, chi and mu:
//
//   major lambda(xi) = W_0(y) / sqrt(2 pi),            y = -exp(-1 - xi),
//   minor lambda(xi) = (W_0(y) - W_{-1}(y)) / sqrt(2 pi),  arg xi = 0,
//   major chi(xi)    = i W_{-1}(y') / sqrt(2 pi),       y' = -exp(-1 + xi),
//   minor chi(xi)    = i (W_{-1}(y') - W_0(y')) / sqrt(2 pi),  arg xi = -pi,
//   minor mu(xi)     = xi^-2 ((xi/2) coth(xi/2) - 1).
//
// Values elsewhere on the Riemann surface of log are analytic continuations
// along the canonical path of canonical_path() or along a BranchPath.

#include <optional>
#include <string>
#include <vector>

#include "resurgence/branch_tracking.hpp"

namespace resurgence {

enum class BorelKind { minor_lambda_3_2, major_lambda_3_2, minor_chi, major_chi, minor_mu };

struct BorelFunction {
  BorelKind kind = BorelKind::minor_lambda_3_2;
  /// W branch indices of the two sheets at the anchor point.
  BranchLabels branch_state;

  static BorelFunction make(BorelKind kind);
  BorelFamily family() const;  // DomainError for minor_mu
  bool is_major() const;
  bool is_minor() const { return !is_major(); }
};

std::string to_string(BorelKind kind);

Complex minor_lambda32(SurfacePoint xi);
Complex major_lambda32(SurfacePoint xi);
Complex minor_chi(SurfacePoint xi);
Complex major_chi(SurfacePoint xi);
/// Meromorphic; throws ProximityError near its poles 2 pi i m, m != 0.
Complex minor_mu(Complex xi);

/// f at a surface point, continued along the canonical path.
Complex evaluate(const BorelFunction& f, SurfacePoint xi);

/// Fast evaluation of f along one curve, reached from the anchor by an
/// approach path. Construction tracks branches once; each call afterwards
/// costs two Lambert-W evaluations.
class CurveEvaluator {
 public:
  /// `anchor_radius` sets the anchor point; `approach` must start there and
  /// end at curve.at(0).
  CurveEvaluator(const BorelFunction& f, double anchor_radius, const Path& approach, const Curve& curve);

  Complex operator()(double t) const;
  Complex point(double t) const { return labeled_.curve().at(t); }
  const LabeledCurve& labeled() const { return labeled_; }

 private:
  Complex combine(SheetPair s) const;
  BorelFunction f_;
  LabeledCurve labeled_;
};

/// f(r e^{i theta}) for 0 < r <= r_max on the sheet reached along the
/// canonical path.
class RayEvaluator {
 public:
  RayEvaluator(const BorelFunction& f, double theta, double r_max);
  Complex operator()(double r) const;
  double theta() const { return theta_; }

 private:
  BorelFunction f_;
  double theta_, r_max_, r0_;
  std::optional<CurveEvaluator> inner_, outer_;
};

/// f(radius e^{i phi}) for phi between phi0 and phi1 (surface arguments).
class ArcEvaluator {
 public:
  ArcEvaluator(const BorelFunction& f, double radius, double phi0, double phi1);
  Complex operator()(double phi) const;

 private:
  BorelFunction f_;
  double radius_, phi0_, phi1_;
  std::optional<CurveEvaluator> arc_;
  Complex fixed_;  // phi0 == phi1
};

enum class DetourSide { left, right };

struct Detour {
  long m = 1;  // omega = 2 pi i m
  DetourSide side = DetourSide::right;
};

/// Radial path along arg xi = base_theta that passes each omega_j on the
/// chosen side (right: omega_j stays on the left of the walker).
struct BranchPath {
  double base_theta = 0.0;
  std::vector<Detour> detours;
  /// Radius of the detour semicircles.
  double detour_radius = 1.0;

  /// Throws TrackingError when a detour point is off the ray or out of order.
  void validate() const;
  /// Curves from the anchor at radius min(pi, ...) to the exit of the last
  /// detour, followed by the radial leg to `radius` (if beyond the exit).
  Path curves(BorelFamily family, double radius) const;
  double anchor_radius() const;
};

/// Continuation of f along `path` to the plane point `xi_target`. After the
/// last detour the path runs radially to the projection of xi_target onto
/// the ray, then straight to xi_target.
Complex continue_minor(const BorelFunction& f, const BranchPath& path, Complex xi_target);

/// Germ sampler: value of f continued along `path` to omega + rho e^{i alpha},
/// where the final leg is the radial approach to omega - rho e^{i base_theta}
/// (surface argument base_theta - pi around omega) followed by an arc of
/// radius rho around omega to argument alpha.
Complex continue_around(const BorelFunction& f, const BranchPath& path, Complex omega, double rho, double alpha);

struct GridSpec {
  double re_min = -1.0, re_max = 1.0;
  double im_min = -1.0, im_max = 1.0;
  int n_re = 11, n_im = 11;
  /// Sheet offset: each point is evaluated at its principal argument + sheet_theta.
  double sheet_theta = 0.0;
};

struct GridSample {
  Complex xi;
  double sheet_theta;
  Complex value;
  std::string kind;  // "value", "proximity" or "origin"
};

std::vector<GridSample> sample_grid(const BorelFunction& f, const GridSpec& grid);

}  // namespace resurgence
