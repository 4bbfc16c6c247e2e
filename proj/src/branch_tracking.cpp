#include "resurgence/branch_tracking.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "resurgence/lambert_w.hpp"

namespace resurgence {

namespace {

using std::numbers::pi;
constexpr double kTwoPi = 2.0 * pi;
// Angles below this are treated as lying on a cut line.
constexpr double kOnLine = 1e-9;

long nearest_line(double im) { return std::lround(im / kTwoPi); }

int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

// Newton on w - exp(L - w) = 0 where L is any logarithm of y.
Complex polish(Complex w, Complex log_y, double& correction) {
  correction = 0.0;
  for (int it = 0; it < 12; ++it) {
    const Complex dw = (w - std::exp(log_y - w)) / (1.0 + w);
    w -= dw;
    correction += std::abs(dw);
    if (std::abs(dw) <= 1e-16 * (1.0 + std::abs(w))) break;
  }
  return w;
}

double step_limit(Complex w) {
  const double d = std::abs(1.0 + w);
  return std::min(0.25, 0.1 * d * d / std::max(std::abs(w), 1e-300));
}

}  // namespace

Complex SurfacePoint::value() const { return std::polar(r, theta); }

SurfacePoint SurfacePoint::from_complex(Complex z) { return {std::abs(z), std::arg(z)}; }

Curve Curve::segment(Complex a, Complex b) {
  Curve c;
  c.kind = Kind::segment;
  c.from = a;
  c.to = b;
  return c;
}

Curve Curve::arc(Complex center, double radius, double phi0, double phi1) {
  Curve c;
  c.kind = Kind::arc;
  c.center = center;
  c.radius = radius;
  c.phi0 = phi0;
  c.phi1 = phi1;
  c.from = center + std::polar(radius, phi0);
  c.to = center + std::polar(radius, phi1);
  return c;
}

Complex Curve::at(double t) const {
  if (kind == Kind::segment) {
    if (t == 1.0) return to;
    return from + t * (to - from);
  }
  return center + std::polar(radius, phi0 + t * (phi1 - phi0));
}

Complex Curve::derivative(double t) const {
  if (kind == Kind::segment) return to - from;
  const double dphi = phi1 - phi0;
  return Complex(0.0, dphi) * std::polar(radius, phi0 + t * dphi);
}

double Curve::length() const {
  if (kind == Kind::segment) return std::abs(to - from);
  return radius * std::abs(phi1 - phi0);
}

std::vector<double> Curve::cut_crossings() const {
  std::vector<double> ts;
  if (kind == Kind::segment) {
    const double ia = from.imag(), ib = to.imag();
    if (ia == ib) return ts;
    const double lo = std::min(ia, ib), hi = std::max(ia, ib);
    for (long m = static_cast<long>(std::ceil(lo / kTwoPi)); m * kTwoPi <= hi; ++m) {
      ts.push_back((m * kTwoPi - ia) / (ib - ia));
    }
  } else {
    if (phi0 == phi1) return ts;
    const double lo = std::min(phi0, phi1), hi = std::max(phi0, phi1);
    const double ic = center.imag();
    for (long m = static_cast<long>(std::ceil((ic - radius) / kTwoPi));
         m * kTwoPi <= ic + radius; ++m) {
      const double s = std::clamp((m * kTwoPi - ic) / radius, -1.0, 1.0);
      const double base = std::asin(s);
      for (double phi : {base, pi - base}) {
        // shift phi into [lo, hi] by multiples of 2 pi
        double p = phi + kTwoPi * std::ceil((lo - phi) / kTwoPi);
        for (; p <= hi; p += kTwoPi) ts.push_back((p - phi0) / (phi1 - phi0));
      }
    }
  }
  std::sort(ts.begin(), ts.end());
  std::vector<double> out;
  for (double t : ts) {
    if (t <= 1e-14 || t >= 1.0 - 1e-14) continue;
    if (!out.empty() && t - out.back() < 1e-14) continue;
    out.push_back(t);
  }
  return out;
}

BranchTracker::BranchTracker(BorelFamily family)
    : family_(family), sigma_(family == BorelFamily::lambda ? -1.0 : 1.0) {}

double BranchTracker::anchor_theta() const { return family_ == BorelFamily::lambda ? 0.0 : -pi; }

Complex BranchTracker::y(Complex xi) const {
  const double alpha = xi.imag() - kTwoPi * static_cast<double>(nearest_line(xi.imag()));
  return -std::exp(-1.0 + sigma_ * xi.real()) * std::polar(1.0, sigma_ * alpha);
}

BranchLabels BranchTracker::anchor_labels() const {
  return family_ == BorelFamily::lambda ? BranchLabels{0, -1} : BranchLabels{-1, 0};
}

SheetPair BranchTracker::anchor_state(double r0) const {
  if (!(r0 > 0.0) || !(r0 < kTwoPi)) throw DomainError("anchor radius must lie in (0, 2 pi)");
  const Complex yy = y(std::polar(r0, anchor_theta()));
  const BranchLabels l = anchor_labels();
  return {lambert_w(yy, l.a).w, lambert_w(yy, l.b).w};
}

void BranchTracker::check_proximity(Complex xi) {
  const long m = nearest_line(xi.imag());
  if (m == 0) return;
  const Complex omega(0.0, kTwoPi * static_cast<double>(m));
  if (std::abs(xi - omega) < kProximityRadius) {
    throw ProximityError("point within " + std::to_string(kProximityRadius) +
                             " of the singular point 2 pi i * " + std::to_string(m),
                         omega);
  }
}

SheetPair BranchTracker::step_along(const Curve& c, double t0, double t1, SheetPair s) const {
  if (t0 == t1) return s;
  const double dir = t1 > t0 ? 1.0 : -1.0;
  const auto rhs = [&](double t, Complex w) {
    return sigma_ * w / (1.0 + w) * c.derivative(t);
  };
  double t = t0;
  int guard = 0;
  while (dir * (t1 - t) > 0.0) {
    if (++guard > 2000000) throw TrackingError("continuation exceeded its step budget");
    const double speed = std::max(std::abs(c.derivative(t)), 1e-300);
    double h = std::min(step_limit(s.a), step_limit(s.b)) / speed;
    const double remaining = dir * (t1 - t);
    h = std::min(h, remaining);
    for (;;) {
      if (h < 1e-15 && h < remaining) {
        throw TrackingError("continuation step underflow near xi = " +
                            std::to_string(c.at(t).real()) + std::to_string(c.at(t).imag()) + "i");
      }
      const double tn = (dir * (t1 - t) - h <= 0.0) ? t1 : t + dir * h;
      const double hh = tn - t;
      SheetPair next{};
      std::array<Complex*, 2> out = {&next.a, &next.b};
      std::array<Complex, 2> cur = {s.a, s.b};
      for (int j = 0; j < 2; ++j) {
        const Complex w = cur[j];
        const Complex k1 = rhs(t, w);
        const Complex k2 = rhs(t + 0.5 * hh, w + 0.5 * hh * k1);
        const Complex k3 = rhs(t + 0.5 * hh, w + 0.5 * hh * k2);
        const Complex k4 = rhs(t + hh, w + hh * k3);
        *out[j] = w + hh / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      }
      const Complex xi = c.at(tn);
      check_proximity(xi);
      const long m = nearest_line(xi.imag());
      const double alpha = xi.imag() - kTwoPi * static_cast<double>(m);
      const Complex log_y(-1.0 + sigma_ * xi.real(), pi + sigma_ * alpha);
      double ca = 0.0, cb = 0.0;
      const Complex pa = polish(next.a, log_y, ca);
      const Complex pb = polish(next.b, log_y, cb);
      if (ca > 0.05 * std::abs(1.0 + pa) || cb > 0.05 * std::abs(1.0 + pb) ||
          !std::isfinite(std::abs(pa)) || !std::isfinite(std::abs(pb))) {
        h *= 0.25;
        continue;
      }
      s = {pa, pb};
      t = tn;
      break;
    }
  }
  return s;
}

SheetPair BranchTracker::follow(const Curve& curve, SheetPair start) const {
  return step_along(curve, 0.0, 1.0, start);
}

SheetPair BranchTracker::follow(const Path& path, SheetPair start) const {
  for (const Curve& c : path) start = follow(c, start);
  return start;
}

LabeledCurve BranchTracker::label(const Curve& curve, SheetPair start) const {
  std::vector<double> breaks = {0.0};
  for (double t : curve.cut_crossings()) breaks.push_back(t);
  breaks.push_back(1.0);

  std::vector<LabeledCurve::Piece> pieces;
  SheetPair state = start;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double t0 = breaks[i], t1 = breaks[i + 1];
    const double tm = 0.5 * (t0 + t1);
    const SheetPair mid = step_along(curve, t0, tm, state);
    const Complex xi_m = curve.at(tm);
    const Complex ym = y(xi_m);

    const auto match = [&](Complex w) {
      const int guess = lambert_branch_of(w);
      for (int d : {0, 1, -1, 2, -2}) {
        const int k = guess + d;
        const Complex v = lambert_w(ym, k).w;
        if (std::abs(v - w) <= 1e-7 * (1.0 + std::abs(w))) return k;
      }
      throw TrackingError("lost the Lambert-W branch while labeling a path piece");
    };

    LabeledCurve::Piece p{};
    p.t0 = t0;
    p.t1 = t1;
    p.labels = {match(mid.a), match(mid.b)};
    const double im_m = xi_m.imag();
    const Complex x0 = curve.at(t0), x1 = curve.at(t1);
    p.m0 = nearest_line(x0.imag());
    p.m1 = nearest_line(x1.imag());
    p.side0 = sign_of(im_m - kTwoPi * static_cast<double>(p.m0));
    p.side1 = sign_of(im_m - kTwoPi * static_cast<double>(p.m1));
    if (std::abs(im_m - kTwoPi * static_cast<double>(p.m0)) < kOnLine) p.side0 = 0;
    if (std::abs(im_m - kTwoPi * static_cast<double>(p.m1)) < kOnLine) p.side1 = 0;
    pieces.push_back(p);
    state = step_along(curve, tm, t1, mid);
  }
  return LabeledCurve(family_, curve, std::move(pieces), state);
}

LabeledCurve::LabeledCurve(BorelFamily family, Curve curve, std::vector<Piece> pieces, SheetPair end)
    : family_(family), curve_(curve), pieces_(std::move(pieces)), end_(end) {}

const LabeledCurve::Piece& LabeledCurve::piece_for(double t) const {
  for (const Piece& p : pieces_) {
    if (t <= p.t1) return p;
  }
  return pieces_.back();
}

BranchLabels LabeledCurve::labels_at(double t) const { return piece_for(t).labels; }

SheetPair LabeledCurve::at(double t) const {
  const Piece& p = piece_for(t);
  const Complex xi = curve_.at(t);
  BranchTracker::check_proximity(xi);
  const double sigma = family_ == BorelFamily::lambda ? -1.0 : 1.0;
  const long m = nearest_line(xi.imag());
  const double alpha = xi.imag() - kTwoPi * static_cast<double>(m);
  const double scale = std::exp(-1.0 + sigma * xi.real());
  int side = 0;
  if (m == p.m0 && p.side0 != 0) side = p.side0;
  else if (m == p.m1 && p.side1 != 0) side = p.side1;
  const double snap = 64.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(xi.imag()));
  if (side != 0 && (std::abs(alpha) < snap || (std::abs(alpha) < kOnLine && sign_of(alpha) != side))) {
    // y sits on the negative real axis; take the limit from the side of the piece.
    const Complex y(-scale, 0.0);
    if (-sigma * side > 0.0) return {lambert_w(y, p.labels.a).w, lambert_w(y, p.labels.b).w};
    return {std::conj(lambert_w(y, -p.labels.a).w), std::conj(lambert_w(y, -p.labels.b).w)};
  }
  const Complex y = -scale * Complex(std::cos(sigma * alpha), std::sin(sigma * alpha));
  return {lambert_w(y, p.labels.a).w, lambert_w(y, p.labels.b).w};
}

double canonical_anchor_radius(double r) { return std::min(r, pi); }

Path canonical_path(BorelFamily family, SurfacePoint target) {
  if (!(target.r > 0.0) || !std::isfinite(target.r) || !std::isfinite(target.theta)) {
    throw DomainError("surface point needs r > 0 and a finite argument");
  }
  const double theta_a = family == BorelFamily::lambda ? 0.0 : -pi;
  const double r0 = canonical_anchor_radius(target.r);
  Path path;
  if (target.theta != theta_a) path.push_back(Curve::arc(0.0, r0, theta_a, target.theta));
  if (target.r != r0) path.push_back(Curve::segment(std::polar(r0, target.theta), std::polar(target.r, target.theta)));
  return path;
}

}  // namespace resurgence
