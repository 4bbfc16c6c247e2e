#include "resurgence/real_major.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "resurgence/reference.hpp"

namespace resurgence {

namespace {

using std::numbers::pi;

constexpr double kClearance = 0.05;
constexpr double kMaxXi = 12.0;

Complex g_of(Complex xi, Complex q) { return xi + std::exp(q) - q - 1.0; }

Complex prefactor(Complex c) {
  const Complex a = 1.5 - c;
  const Complex gam = a.imag() == 0.0 ? Complex(std::tgamma(a.real())) : std::exp(log_gamma_ref(a));
  return gam / std::sqrt(2.0 * pi);
}

double left_end(double xi_abs) { return -(xi_abs + 10.0); }
double right_end(double xi_abs) { return std::log(xi_abs + 10.0) + 3.0; }

// Continuous arg of g along each edge, sampled from the right end leftwards.
class BranchTable {
 public:
  BranchTable(Complex xi, const std::vector<Complex>& nodes) : xi_(xi), nodes_(nodes) {
    const std::size_t n = nodes.size();
    if (n < 2) throw DomainError("Q-path needs at least two nodes");
    double a = std::arg(g_of(xi, nodes.back()));
    if (std::abs(a) >= pi / 2.0) throw TrackingError("right end of the Q-path is not in the tail region");
    edges_.resize(n - 1);
    for (std::size_t e = n - 1; e-- > 0;) {
      std::vector<std::pair<double, double>> s{{1.0, a}};
      double t = 1.0, dt = 1.0 / 16.0;
      while (t > 0.0) {
        const double tn = std::max(0.0, t - dt);
        const Complex gv = g_of(xi, point(e, tn));
        if (std::abs(gv) == 0.0) throw TrackingError("Q-path passes through a root");
        const double cand = a + std::remainder(std::arg(gv) - a, 2.0 * pi);
        if (std::abs(cand - a) > 0.2) {
          if (dt < 1e-10) throw TrackingError("Q-path passes through a root");
          dt *= 0.5;
          continue;
        }
        s.emplace_back(tn, cand);
        a = cand;
        t = tn;
        dt = std::min(2.0 * dt, 1.0 / 16.0);
      }
      std::reverse(s.begin(), s.end());
      edges_[e] = std::move(s);
    }
    const double p0 = std::arg(g_of(xi, nodes.front()));
    left_offset_ = 2.0 * pi * std::round((a - p0) / (2.0 * pi));
  }

  Complex point(std::size_t e, double t) const { return nodes_[e] + t * (nodes_[e + 1] - nodes_[e]); }

  Complex log_g(std::size_t e, double t, Complex gv) const {
    const auto& s = edges_[e];
    auto it = std::upper_bound(s.begin(), s.end(), t, [](double v, const auto& p) { return v < p.first; });
    std::size_t j = static_cast<std::size_t>(it - s.begin());
    if (j == s.size()) j = s.size() - 1;
    if (j > 0 && t - s[j - 1].first < s[j].first - t) --j;
    const double ref = s[j].second;
    const double p = std::arg(gv);
    return {std::log(std::abs(gv)), p + 2.0 * pi * std::round((ref - p) / (2.0 * pi))};
  }

  double left_offset() const { return left_offset_; }

 private:
  Complex xi_;
  const std::vector<Complex>& nodes_;
  std::vector<std::vector<std::pair<double, double>>> edges_;
  double left_offset_ = 0.0;
};

bool in_triangle(Complex p, Complex a, Complex b, Complex c) {
  const auto cross = [](Complex u, Complex v) { return u.real() * v.imag() - u.imag() * v.real(); };
  const double d1 = cross(b - a, p - a), d2 = cross(c - b, p - b), d3 = cross(a - c, p - c);
  const bool neg = d1 < 0 || d2 < 0 || d3 < 0;
  const bool pos = d1 > 0 || d2 > 0 || d3 > 0;
  return !(neg && pos);
}

void ensure_sweep_free(const std::vector<Complex>& roots, std::size_t self, Complex a, Complex b, Complex c) {
  for (std::size_t k = 0; k < roots.size(); ++k) {
    if (k != self && in_triangle(roots[k], a, b, c)) {
      throw TrackingError("Q-path deformation would sweep over a root");
    }
  }
}

// Deforms the path until every root keeps distance kClearance from it.
void push_path(std::vector<Complex>& nodes, const std::vector<Complex>& roots) {
  for (int iter = 0; iter < 400; ++iter) {
    bool changed = false;
    for (std::size_t k = 0; k < roots.size() && !changed; ++k) {
      const Complex r = roots[k];
      for (std::size_t i = 0; i + 1 < nodes.size() && !changed; ++i) {
        const Complex a = nodes[i], d = nodes[i + 1] - a;
        const double len = std::abs(d);
        if (len == 0.0) continue;
        const double t = std::clamp((std::conj(d) * (r - a)).real() / (len * len), 0.0, 1.0);
        const Complex x = a + t * d;
        const double dist = std::abs(r - x);
        if (dist >= kClearance) continue;
        if (dist < 1e-12) throw TrackingError("root on the Q-path");
        changed = true;
        if (t > 0.0 && t < 1.0) {
          const Complex n = (x - r) / dist;
          const double w = 2.0 * kClearance / len;
          const double ta = std::max(0.0, t - w), tb = std::min(1.0, t + w);
          const double h = 2.0 * kClearance - dist;
          const Complex fa = a + ta * d, fb = a + tb * d;
          const Complex ua = fa + h * n, ub = fb + h * n;
          ensure_sweep_free(roots, k, fa, fb, ub);
          ensure_sweep_free(roots, k, fa, ub, ua);
          std::vector<Complex> ins;
          if (ta > 0.0) ins.push_back(fa);
          ins.push_back(ua);
          ins.push_back(ub);
          if (tb < 1.0) ins.push_back(fb);
          nodes.insert(nodes.begin() + static_cast<std::ptrdiff_t>(i + 1), ins.begin(), ins.end());
        } else {
          const std::size_t j = t == 0.0 ? i : i + 1;
          if (j == 0 || j + 1 == nodes.size()) throw TrackingError("root reached the end of the Q-path");
          const Complex p = nodes[j];
          const Complex q = r + (p - r) / std::abs(p - r) * (2.0 * kClearance);
          ensure_sweep_free(roots, k, nodes[j - 1], p, q);
          ensure_sweep_free(roots, k, p, nodes[j + 1], q);
          nodes[j] = q;
        }
      }
    }
    if (!changed) return;
  }
  throw TrackingError("Q-path deformation did not settle");
}

std::vector<Complex> find_roots(Complex xi, double left, double right) {
  const double im_max = 6.0 * pi;
  std::vector<Complex> roots;
  for (double re = left; re <= right; re += 0.5) {
    for (double im = -im_max; im <= im_max; im += 0.5) {
      Complex q(re, im);
      bool ok = false;
      for (int it = 0; it < 60; ++it) {
        const Complex d = std::exp(q) - 1.0;
        if (std::abs(d) < 1e-14) break;
        Complex step = g_of(xi, q) / d;
        if (std::abs(step) > 1.0) step /= std::abs(step);
        q -= step;
        if (std::abs(step) < 1e-14 * (1.0 + std::abs(q))) {
          ok = true;
          break;
        }
      }
      if (!ok || q.real() < left - 1.0 || q.real() > right + 1.0 || std::abs(q.imag()) > im_max + 1.0) continue;
      const bool seen =
          std::any_of(roots.begin(), roots.end(), [&](Complex o) { return std::abs(o - q) < 1e-7; });
      if (!seen) roots.push_back(q);
    }
  }
  return roots;
}

bool near_singular(Complex a, Complex b) {
  // Distance from the segment [a, b] to 2 pi i k for the k that can be close.
  const double lo = std::min(a.imag(), b.imag()) / (2.0 * pi) - 1.0;
  const double hi = std::max(a.imag(), b.imag()) / (2.0 * pi) + 1.0;
  for (double k = std::floor(lo); k <= std::ceil(hi); k += 1.0) {
    const Complex p(0.0, 2.0 * pi * k);
    const Complex d = b - a;
    const double l2 = std::norm(d);
    const double t = l2 == 0.0 ? 0.0 : std::clamp((std::conj(d) * (p - a)).real() / l2, 0.0, 1.0);
    if (std::abs(a + t * d - p) < kProximityRadius) return true;
  }
  return false;
}

}  // namespace

std::pair<double, double> real_roots(double s) {
  if (!(s > 0.0)) throw DomainError("real_roots: s must be positive");
  const auto h = [s](double q) { return std::expm1(q) - q - s; };
  const auto solve = [&](double lo, double hi) {
    for (int it = 0; it < 200 && hi - lo > 1e-16 * std::max(1.0, std::abs(lo)); ++it) {
      const double mid = 0.5 * (lo + hi);
      ((h(mid) > 0.0) == (h(hi) > 0.0) ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
  };
  double hi = 1.0;
  while (h(hi) <= 0.0) hi *= 2.0;
  return {solve(-s - 1.0, 0.0), solve(0.0, hi)};
}

QPath principal_qpath(Complex xi, int side, double left, double right) {
  QPath p;
  if (xi.real() < 0.0) {
    const int sgn = xi.imag() > 0.0 ? 1 : xi.imag() < 0.0 ? -1 : side;
    if (sgn != 1 && sgn != -1) throw DomainError("principal_qpath: xi on the negative axis needs a side");
    const auto [qm, qp] = real_roots(-xi.real());
    const double rm = std::min(0.25, 0.5 * std::abs(qm));
    const double rp = std::min(0.25, 0.5 * qp);
    const Complex dn(0.0, -sgn), up(0.0, sgn);
    p.nodes = {left,          qm - rm,       qm - rm + rm * dn, qm + rm + rm * dn, qm + rm, 0.0,
               qp - rp,       qp - rp + rp * up, qp + rp + rp * up, qp + rp, right};
  } else {
    p.nodes = {left, -1.0, 0.0, 1.0, right};
  }
  return p;
}

RealMajorResult rho_on_path(RealMajorKind kind, Complex c, Complex xi, const QPath& path, const QuadratureSpec& spec) {
  spec.validate();
  const bool nu = kind == RealMajorKind::nu;
  if (!(c.real() < (nu ? 1.0 : 0.5))) throw DomainError("real-major: Re c out of range");
  const Complex alpha = c - 1.5;
  const double ra = alpha.real(), ia = std::abs(alpha.imag());
  const double omega = nu ? 0.5 : 0.0;
  const auto weight = [nu](Complex q) { return nu ? std::exp(0.5 * q) : Complex(1.0); };
  const BranchTable table(xi, path.nodes);
  const std::size_t n_edges = path.nodes.size() - 1;
  const double piece_tol = spec.abs_tol / static_cast<double>(n_edges + 2);

  QuadratureResult total;
  for (std::size_t e = 0; e < n_edges; ++e) {
    const Complex dq = path.nodes[e + 1] - path.nodes[e];
    const auto f = [&](double t) {
      const Complex q = table.point(e, t);
      return std::exp(alpha * table.log_g(e, t, g_of(xi, q))) * weight(q) * dq;
    };
    total += integrate(f, 0.0, 1.0, spec.rel_tol, piece_tol, spec.max_subdivisions);
  }

  const double xa = std::abs(xi);
  const double R = path.nodes.back().real(), L = path.nodes.front().real();

  // Right tail: |g| >= e^Q / 2 once e^Q >= 2 (Q + 1 + |xi|).
  double t0 = 2.0;
  for (int it = 0; it < 20; ++it) t0 = std::log(2.0 * (t0 + 1.0 + xa)) + 0.5;
  const double rate = ra + omega;
  const double cr = std::pow(2.0, -ra) * std::exp(ia * pi / 2.0);
  const double T = std::max({R, t0, std::log(0.25 * spec.abs_tol * std::abs(rate) / cr) / rate});
  const auto right = [&](double q) { return std::exp(alpha * std::log(g_of(xi, q))) * weight(q); };
  total += integrate(right, R, T, spec.rel_tol, piece_tol, spec.max_subdivisions);

  // Left tail: Q = L + 1 - e^s, where |g| >= |Q| / 2.
  const double off = table.left_offset();
  const double cl = std::pow(2.0, -ra) * std::exp(ia * (pi / 2.0 + std::abs(off)));
  const auto left_bound = [&](double u) {
    return nu ? cl * std::pow(u, ra) * 2.0 * std::exp(-u / 2.0) : cl * std::pow(u, ra + 1.0) / std::abs(ra + 1.0);
  };
  double U = std::max(-L, 2.0 * (xa + 1.0));
  while (left_bound(U) > 0.25 * spec.abs_tol && U < 1e300) U *= 2.0;
  const double S = std::log(U + L + 1.0);
  const auto left = [&](double s) {
    const double es = std::exp(s);
    const Complex q = L + 1.0 - es;
    const Complex gv = g_of(xi, q);
    const Complex lg(std::log(std::abs(gv)), std::arg(gv) + off);
    return std::exp(alpha * lg) * weight(q) * es;
  };
  total += integrate(left, 0.0, S, spec.rel_tol, piece_tol, spec.max_subdivisions);

  const Complex pre = prefactor(c);
  RealMajorResult out;
  out.value = pre * total.value;
  out.est_error = std::abs(pre) * (total.est_error + 0.5 * spec.abs_tol);
  out.panels = total.panels;
  out.qpath_nodes = static_cast<int>(path.nodes.size());
  return out;
}

RealMajorResult rho_lambda_c(Complex c, Complex xi, const QuadratureSpec& spec) {
  if (xi.imag() == 0.0 && xi.real() <= 0.0) throw DomainError("rho_lambda_c: xi on (-inf, 0]");
  const double xa = std::abs(xi);
  return rho_on_path(RealMajorKind::lambda, c, xi, principal_qpath(xi, 0, left_end(xa), right_end(xa)), spec);
}

RealMajorResult rho_lambda_c_axis(Complex c, double s, int side, const QuadratureSpec& spec) {
  if (!(s > 0.0)) throw DomainError("rho_lambda_c_axis: s must be positive");
  const Complex xi(-s, 0.0);
  return rho_on_path(RealMajorKind::lambda, c, xi, principal_qpath(xi, side, left_end(s), right_end(s)), spec);
}

RealMajorResult rho_nu_c(Complex c, Complex xi, const QuadratureSpec& spec) {
  if (xi.imag() == 0.0 && xi.real() <= 0.0) throw DomainError("rho_nu_c: xi on (-inf, 0]");
  const double xa = std::abs(xi);
  return rho_on_path(RealMajorKind::nu, c, xi, principal_qpath(xi, 0, left_end(xa), right_end(xa)), spec);
}

RealMajorResult rho_continue(Complex c, const std::vector<Complex>& path_xi, const QuadratureSpec& spec,
                             QPath* final_path) {
  if (path_xi.empty()) throw DomainError("rho_continue: empty path");
  const Complex start = path_xi.front();
  if (start.imag() == 0.0 && start.real() <= 0.0) throw DomainError("rho_continue: path must start off (-inf, 0]");
  double xmax = 0.0;
  for (std::size_t i = 0; i < path_xi.size(); ++i) {
    xmax = std::max(xmax, std::abs(path_xi[i]));
    const Complex prev = i == 0 ? path_xi[0] : path_xi[i - 1];
    if (near_singular(prev, path_xi[i])) {
      const double k = std::round(path_xi[i].imag() / (2.0 * pi));
      throw ProximityError("rho_continue: path enters a disk around 2 pi i Z", Complex(0.0, 2.0 * pi * k));
    }
  }
  if (xmax > kMaxXi) throw DomainError("rho_continue: path leaves |xi| <= 12");
  const double L = left_end(xmax), R = right_end(xmax);

  QPath qp = principal_qpath(start, 0, L, R);
  std::vector<Complex> roots = find_roots(start, L, R);
  push_path(qp.nodes, roots);

  Complex xi = start;
  std::vector<Complex> next(roots.size());
  for (std::size_t k = 1; k < path_xi.size(); ++k) {
    const Complex target = path_xi[k];
    while (xi != target) {
      double h = 0.05;
      for (const Complex q : roots) h = std::min(h, 0.25 * kClearance * std::abs(std::exp(q) - 1.0));
      for (;;) {
        if (h < 1e-12) throw TrackingError("rho_continue: step size underflow while tracking roots");
        const Complex rem = target - xi;
        const Complex xn = std::abs(rem) <= h ? target : xi + rem / std::abs(rem) * h;
        bool ok = true;
        for (std::size_t j = 0; j < roots.size() && ok; ++j) {
          Complex q = roots[j] - (xn - xi) / (std::exp(roots[j]) - 1.0);
          bool conv = false;
          for (int it = 0; it < 30; ++it) {
            const Complex step = g_of(xn, q) / (std::exp(q) - 1.0);
            q -= step;
            if (std::abs(step) < 1e-14 * (1.0 + std::abs(q))) {
              conv = true;
              break;
            }
          }
          ok = conv && std::abs(q - roots[j]) <= 0.5 * kClearance;
          next[j] = q;
        }
        if (!ok) {
          h *= 0.5;
          continue;
        }
        xi = xn;
        break;
      }
      for (std::size_t a = 0; a < next.size(); ++a) {
        for (std::size_t b = a + 1; b < next.size(); ++b) {
          if (std::abs(next[a] - next[b]) < 1e-6) throw TrackingError("rho_continue: roots collide");
        }
      }
      roots = next;
      push_path(qp.nodes, roots);
    }
  }
  RealMajorResult out = rho_on_path(RealMajorKind::lambda, c, xi, qp, spec);
  if (final_path) *final_path = qp;
  return out;
}

std::vector<Complex> arc_path(double r, double phi0, double phi1, double max_step) {
  const int n = std::max(1, static_cast<int>(std::ceil(std::abs(phi1 - phi0) * r / max_step)));
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) out.push_back(std::polar(r, phi0 + (phi1 - phi0) * k / n));
  return out;
}

std::vector<Complex> loop_around_2pi_i(double sheet_arg) {
  if (std::abs(std::remainder(sheet_arg - pi / 2.0, 2.0 * pi)) > 1e-12) {
    throw DomainError("loop_around_2pi_i: sheet_arg must point at +i");
  }
  std::vector<Complex> p = arc_path(1.0, 0.0, sheet_arg);
  const int n = 40;
  const double top = 2.0 * pi - 1.0;
  for (int k = 1; k <= n; ++k) p.emplace_back(0.0, 1.0 + (top - 1.0) * k / n);
  std::vector<Complex> circle = arc_path(1.0, -pi / 2.0, 3.0 * pi / 2.0);
  for (std::size_t k = 1; k < circle.size(); ++k) p.push_back(circle[k] + Complex(0.0, 2.0 * pi));
  for (int k = n - 1; k >= 0; --k) p.emplace_back(0.0, 1.0 + (top - 1.0) * k / n);
  const std::vector<Complex> back = arc_path(1.0, sheet_arg, 0.0);
  p.insert(p.end(), back.begin() + 1, back.end());
  return p;
}

Complex minor_lambda1_contour(Complex xi, const QuadratureSpec& spec) {
  spec.validate();
  if (!(std::abs(xi) < 2.0)) throw DomainError("minor_lambda1_contour: needs |xi| < 2");
  double reach = 0.0;
  for (const double sg : {1.0, -1.0}) {
    Complex q = sg * std::sqrt(2.0 * xi);
    if (q == Complex(0.0)) q = sg * 1e-3;
    for (int it = 0; it < 60; ++it) {
      const Complex d = std::exp(q) - 1.0;
      if (std::abs(d) < 1e-300) break;
      q -= (std::exp(q) - q - 1.0 - xi) / d;
    }
    reach = std::max(reach, std::abs(q));
  }
  const double rg = std::max(2.0, 1.5 * reach + 0.3);
  const auto h = [&](Complex q) { return std::exp(q) - q - 1.0 - xi; };

  Complex prev_val;
  for (int n = 64; n <= (1 << 16); n *= 2) {
    Complex s = std::sqrt(h(Complex(rg)));
    const Complex s0 = s;
    Complex acc;
    bool fine = true;
    for (int j = 0; j < n && fine; ++j) {
      const Complex q = std::polar(rg, 2.0 * pi * j / n);
      Complex sj = std::sqrt(h(q));
      if (std::abs(sj + s) < std::abs(sj - s)) sj = -sj;
      if (j > 0 && std::abs(sj - s) > 0.5 * std::abs(sj)) fine = false;
      s = sj;
      acc += std::exp(q) * q / s;
    }
    if (!fine) continue;
    Complex back = std::sqrt(h(Complex(rg)));
    if (std::abs(back + s) < std::abs(back - s)) back = -back;
    if (std::abs(back - s0) > 1e-8 * std::abs(s0)) throw TrackingError("minor_lambda1_contour: square root did not close");
    const Complex val = acc / (static_cast<double>(n) * std::sqrt(2.0));
    if (n > 64 && std::abs(val - prev_val) <= spec.rel_tol * std::abs(val) + spec.abs_tol) return val;
    prev_val = val;
  }
  throw QuadratureError("minor_lambda1_contour: trapezoid rule did not converge");
}

RhoMajor::RhoMajor(Complex c, QuadratureSpec spec) : c_(c), spec_(spec) {
  if (!(c.real() < 0.5)) throw DomainError("RhoMajor: needs Re c < 1/2");
}

Complex RhoMajor::at(SurfacePoint xi) const {
  const double th = xi.theta;
  if (std::abs(th) < pi) return rho_lambda_c(c_, std::polar(xi.r, th), spec_).value;
  if (std::abs(th) == pi) return rho_lambda_c_axis(c_, xi.r, th > 0 ? 1 : -1, spec_).value;
  return rho_continue(c_, arc_path(xi.r, 0.0, th), spec_).value;
}

GrowthCertificate RhoMajor::growth() const { return {0.0, 2.0}; }

}  // namespace resurgence
