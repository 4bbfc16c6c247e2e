#include "resurgence/borel_plane.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "resurgence/exact_series.hpp"
#include "resurgence/lambert_w.hpp"

namespace resurgence {

namespace {

using std::numbers::pi;
constexpr double kTwoPi = 2.0 * pi;
const double kInvSqrt2Pi = 1.0 / std::sqrt(kTwoPi);

// B_{2n+2} / (2n+2)! for the Taylor series of minor mu at 0.
const std::vector<double>& mu_taylor() {
  static const std::vector<double> coeffs = [] {
    const auto b = bernoulli_numbers(40);
    std::vector<double> out;
    Rational fact = 1;
    for (int k = 1; k <= 40; ++k) {
      fact *= k;
      if (k % 2 == 0) out.push_back(static_cast<double>(b[static_cast<std::size_t>(k)] / fact));
    }
    return out;
  }();
  return coeffs;
}

SheetPair anchor_state(const BorelFunction& f, double r0) {
  const BranchTracker tr(f.family());
  const Complex y = tr.y(std::polar(r0, tr.anchor_theta()));
  return {lambert_w(y, f.branch_state.a).w, lambert_w(y, f.branch_state.b).w};
}

Complex prefactor(BorelFamily family) {
  return family == BorelFamily::lambda ? Complex(kInvSqrt2Pi, 0.0) : Complex(0.0, kInvSqrt2Pi);
}

Complex combine_pair(const BorelFunction& f, SheetPair s) {
  const Complex p = prefactor(f.family());
  return f.is_major() ? p * s.a : p * (s.a - s.b);
}

// Value at the end of `path` (empty path: the anchor point itself).
Complex evaluate_path_end(const BorelFunction& f, double r0, const Path& path) {
  if (path.empty()) return combine_pair(f, anchor_state(f, r0));
  const Path approach(path.begin(), path.end() - 1);
  return CurveEvaluator(f, r0, approach, path.back())(1.0);
}

double ray_angle_mismatch(double theta, Complex omega) {
  return std::abs(std::remainder(theta - std::arg(omega), kTwoPi));
}

}  // namespace

BorelFunction BorelFunction::make(BorelKind kind) {
  BorelFunction f;
  f.kind = kind;
  if (kind == BorelKind::minor_chi || kind == BorelKind::major_chi) f.branch_state = {-1, 0};
  return f;
}

BorelFamily BorelFunction::family() const {
  switch (kind) {
    case BorelKind::minor_lambda_3_2:
    case BorelKind::major_lambda_3_2: return BorelFamily::lambda;
    case BorelKind::minor_chi:
    case BorelKind::major_chi: return BorelFamily::chi;
    case BorelKind::minor_mu: break;
  }
  throw DomainError("minor_mu is meromorphic and carries no Lambert-W sheets");
}

bool BorelFunction::is_major() const {
  return kind == BorelKind::major_lambda_3_2 || kind == BorelKind::major_chi;
}

std::string to_string(BorelKind kind) {
  switch (kind) {
    case BorelKind::minor_lambda_3_2: return "minor_lambda_3_2";
    case BorelKind::major_lambda_3_2: return "major_lambda_3_2";
    case BorelKind::minor_chi: return "minor_chi";
    case BorelKind::major_chi: return "major_chi";
    case BorelKind::minor_mu: return "minor_mu";
  }
  return "unknown";
}

Complex minor_mu(Complex xi) {
  BranchTracker::check_proximity(xi);
  if (std::abs(xi) < 0.5) {
    const auto& c = mu_taylor();
    const Complex x2 = xi * xi;
    Complex s = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * x2 + *it;
    return s;
  }
  const Complex h = 0.5 * xi;
  return (h / std::tanh(h) - 1.0) / (xi * xi);
}

Complex evaluate(const BorelFunction& f, SurfacePoint xi) {
  if (f.kind == BorelKind::minor_mu) return minor_mu(xi.value());
  const Path path = canonical_path(f.family(), xi);
  return evaluate_path_end(f, canonical_anchor_radius(xi.r), path);
}

Complex minor_lambda32(SurfacePoint xi) { return evaluate(BorelFunction::make(BorelKind::minor_lambda_3_2), xi); }
Complex major_lambda32(SurfacePoint xi) { return evaluate(BorelFunction::make(BorelKind::major_lambda_3_2), xi); }
Complex minor_chi(SurfacePoint xi) { return evaluate(BorelFunction::make(BorelKind::minor_chi), xi); }
Complex major_chi(SurfacePoint xi) { return evaluate(BorelFunction::make(BorelKind::major_chi), xi); }

CurveEvaluator::CurveEvaluator(const BorelFunction& f, double anchor_radius, const Path& approach,
                               const Curve& curve)
    : f_(f),
      labeled_([&] {
        const BranchTracker tr(f.family());
        const SheetPair start = tr.follow(approach, anchor_state(f, anchor_radius));
        return tr.label(curve, start);
      }()) {}

Complex CurveEvaluator::combine(SheetPair s) const { return combine_pair(f_, s); }

Complex CurveEvaluator::operator()(double t) const { return combine(labeled_.at(t)); }

RayEvaluator::RayEvaluator(const BorelFunction& f, double theta, double r_max)
    : f_(f), theta_(theta), r_max_(r_max), r0_(canonical_anchor_radius(r_max)) {
  if (!(r_max > 0.0) || !std::isfinite(r_max)) throw DomainError("RayEvaluator: r_max must be positive");
  if (f.kind == BorelKind::minor_mu) return;
  const BorelFamily fam = f.family();
  const double theta_a = BranchTracker(fam).anchor_theta();
  Path approach;
  if (theta != theta_a) approach.push_back(Curve::arc(0.0, r0_, theta_a, theta));
  const Complex dir = std::polar(1.0, theta);
  inner_.emplace(f, r0_, approach, Curve::segment(r0_ * dir, 1e-3 * r0_ * dir));
  if (r_max > r0_) {
    Path to_outer = approach;
    outer_.emplace(f, r0_, to_outer, Curve::segment(r0_ * dir, r_max * dir));
  }
}

Complex RayEvaluator::operator()(double r) const {
  if (f_.kind == BorelKind::minor_mu) return minor_mu(std::polar(r, theta_));
  if (!(r > 0.0) || r > r_max_ * (1.0 + 1e-14)) throw DomainError("RayEvaluator: radius outside (0, r_max]");
  if (r <= r0_ || !outer_) return (*inner_)((r0_ - r) / (r0_ - 1e-3 * r0_));
  return (*outer_)((r - r0_) / (r_max_ - r0_));
}

ArcEvaluator::ArcEvaluator(const BorelFunction& f, double radius, double phi0, double phi1)
    : f_(f), radius_(radius), phi0_(phi0), phi1_(phi1) {
  if (!(radius > 0.0) || !(radius < kTwoPi)) throw DomainError("ArcEvaluator: radius must lie in (0, 2 pi)");
  if (f.kind == BorelKind::minor_mu) {
    fixed_ = 0.0;
    return;
  }
  const BorelFamily fam = f.family();
  const double theta_a = BranchTracker(fam).anchor_theta();
  Path approach;
  if (phi0 != theta_a) approach.push_back(Curve::arc(0.0, radius, theta_a, phi0));
  if (phi0 == phi1) {
    fixed_ = evaluate_path_end(f, radius, approach);
    return;
  }
  arc_.emplace(f, radius, approach, Curve::arc(0.0, radius, phi0, phi1));
}

Complex ArcEvaluator::operator()(double phi) const {
  if (f_.kind == BorelKind::minor_mu) return minor_mu(std::polar(radius_, phi));
  if (!arc_) return fixed_;
  return (*arc_)((phi - phi0_) / (phi1_ - phi0_));
}

double BranchPath::anchor_radius() const { return pi; }

void BranchPath::validate() const {
  if (!(detour_radius > 10.0 * kProximityRadius) || !(detour_radius < pi)) {
    throw TrackingError("BranchPath: detour radius must lie between the proximity radius and pi");
  }
  long prev = 0;
  for (const Detour& d : detours) {
    if (d.m == 0) throw TrackingError("BranchPath: detour around the origin");
    const Complex omega(0.0, kTwoPi * static_cast<double>(d.m));
    if (ray_angle_mismatch(base_theta, omega) > 1e-9) {
      throw TrackingError("BranchPath: detour point 2 pi i * " + std::to_string(d.m) +
                          " is not on the ray of direction base_theta");
    }
    if (std::labs(d.m) <= std::labs(prev)) throw TrackingError("BranchPath: detours must be ordered by modulus");
    prev = d.m;
  }
}

Path BranchPath::curves(BorelFamily family, double radius) const {
  validate();
  const double theta_a = BranchTracker(family).anchor_theta();
  const double r0 = anchor_radius();
  const Complex dir = std::polar(1.0, base_theta);
  Path path;
  if (base_theta != theta_a) path.push_back(Curve::arc(0.0, r0, theta_a, base_theta));
  double current = r0;
  for (const Detour& d : detours) {
    const double rw = kTwoPi * static_cast<double>(std::labs(d.m));
    const Complex omega = rw * dir;
    path.push_back(Curve::segment(current * dir, (rw - detour_radius) * dir));
    const double end = d.side == DetourSide::right ? base_theta + 2.0 * pi : base_theta;
    path.push_back(Curve::arc(omega, detour_radius, base_theta + pi, end));
    current = rw + detour_radius;
  }
  if (radius > current) {
    path.push_back(Curve::segment(current * dir, radius * dir));
  } else if (!detours.empty() && radius < current) {
    throw TrackingError("BranchPath: target lies before the exit of the last detour");
  } else if (radius < current) {
    path.push_back(Curve::segment(current * dir, radius * dir));
  }
  return path;
}

Complex continue_minor(const BorelFunction& f, const BranchPath& path, Complex xi_target) {
  if (f.kind == BorelKind::minor_mu) {
    path.validate();
    return minor_mu(xi_target);
  }
  const Complex dir = std::polar(1.0, path.base_theta);
  const double proj = (xi_target * std::conj(dir)).real();
  Path curves = path.curves(f.family(), proj);
  const Complex foot = curves.empty() ? path.anchor_radius() * dir : curves.back().at(1.0);
  if (std::abs(xi_target - foot) > 1e-15 * std::abs(xi_target)) curves.push_back(Curve::segment(foot, xi_target));
  return evaluate_path_end(f, path.anchor_radius(), curves);
}

Complex continue_around(const BorelFunction& f, const BranchPath& path, Complex omega, double rho, double alpha) {
  if (ray_angle_mismatch(path.base_theta, omega) > 1e-9) {
    throw TrackingError("continue_around: omega is not on the ray of the path");
  }
  if (!(rho > 0.0) || !(rho < path.detour_radius)) throw DomainError("continue_around: rho must lie in (0, detour radius)");
  if (f.kind == BorelKind::minor_mu) return minor_mu(omega + std::polar(rho, alpha));
  Path curves = path.curves(f.family(), std::abs(omega) - rho);
  const double start = path.base_theta - pi;
  if (alpha != start) curves.push_back(Curve::arc(omega, rho, start, alpha));
  return evaluate_path_end(f, path.anchor_radius(), curves);
}

std::vector<GridSample> sample_grid(const BorelFunction& f, const GridSpec& g) {
  if (g.n_re < 1 || g.n_im < 1) throw DomainError("sample_grid: grid needs at least one point per axis");
  std::vector<GridSample> out;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (int i = 0; i < g.n_im; ++i) {
    const double im = g.n_im == 1 ? g.im_min : g.im_min + (g.im_max - g.im_min) * i / (g.n_im - 1);
    for (int j = 0; j < g.n_re; ++j) {
      const double re = g.n_re == 1 ? g.re_min : g.re_min + (g.re_max - g.re_min) * j / (g.n_re - 1);
      const Complex xi(re, im);
      GridSample s{xi, g.sheet_theta, Complex(nan, nan), "value"};
      if (std::abs(xi) < 1e-14) {
        s.kind = "origin";
      } else {
        try {
          s.value = evaluate(f, {std::abs(xi), std::arg(xi) + g.sheet_theta});
        } catch (const ProximityError&) {
          s.kind = "proximity";
        }
      }
      out.push_back(s);
    }
  }
  return out;
}

}  // namespace resurgence
