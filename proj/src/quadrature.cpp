#include "resurgence/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <string>
#include <vector>

namespace resurgence {

namespace {

// Kronrod abscissae (descending, last is the centre) and weights; Gauss
// weights belong to the odd-indexed abscissae.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  Complex value;
  double error;
  double magnitude;  // integral of |f|
};

Panel gauss_kronrod(const RealToComplex& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const Complex fc = f(c);
  Complex kronrod = kWgk[7] * fc;
  Complex gauss = kWg[3] * fc;
  double magnitude = kWgk[7] * std::abs(fc);
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const Complex fl = f(c - dx), fr = f(c + dx);
    const Complex s = fl + fr;
    kronrod += kWgk[j] * s;
    magnitude += kWgk[j] * (std::abs(fl) + std::abs(fr));
    if (j % 2 == 1) gauss += kWg[j / 2] * s;
  }
  kronrod *= h;
  gauss *= h;
  return {a, b, kronrod, std::abs(kronrod - gauss), std::abs(h) * magnitude};
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) throw DomainError("QuadratureSpec: tolerances must be positive");
  if (!(hankel_delta > 0.0) || !(hankel_delta < 2.0 * std::numbers::pi)) {
    throw DomainError("QuadratureSpec: hankel_delta must lie in (0, 2 pi)");
  }
  if (!(max_radius > 0.0)) throw DomainError("QuadratureSpec: max_radius must be positive");
  if (max_subdivisions < 1) throw DomainError("QuadratureSpec: max_subdivisions must be >= 1");
}

Complex stable_sum(std::span<const Complex> terms) {
  double sr = 0.0, cr = 0.0, si = 0.0, ci = 0.0;
  const auto add = [](double& s, double& c, double x) {
    const double t = s + x;
    c += std::abs(s) >= std::abs(x) ? (s - t) + x : (x - t) + s;
    s = t;
  };
  for (const Complex& t : terms) {
    add(sr, cr, t.real());
    add(si, ci, t.imag());
  }
  return {sr + cr, si + ci};
}

QuadratureResult integrate(const RealToComplex& f, double a, double b, double rel_tol,
                           double abs_tol, int max_subdivisions) {
  if (a == b) return {Complex(0.0, 0.0), 0.0, 0};
  const auto by_error = [](const Panel& x, const Panel& y) { return x.error < y.error; };
  std::priority_queue<Panel, std::vector<Panel>, decltype(by_error)> heap(by_error);
  heap.push(gauss_kronrod(f, a, b));
  Complex total = heap.top().value;
  double error = heap.top().error;
  double magnitude = heap.top().magnitude;
  int panels = 1;
  // Cancellation floor: no panel sum can beat rounding on the integral of |f|.
  const double eps = std::numeric_limits<double>::epsilon();
  while (error > std::max({abs_tol, rel_tol * std::abs(total), 50.0 * eps * magnitude})) {
    if (panels >= max_subdivisions) {
      throw QuadratureError("integrate: no convergence on [" + std::to_string(a) + ", " +
                            std::to_string(b) + "] after " + std::to_string(panels) +
                            " panels, error estimate " + std::to_string(error));
    }
    const Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid == worst.a || mid == worst.b) {
      throw QuadratureError("integrate: panel width underflow near " + std::to_string(mid));
    }
    const Panel left = gauss_kronrod(f, worst.a, mid);
    const Panel right = gauss_kronrod(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    magnitude += left.magnitude + right.magnitude - worst.magnitude;
    heap.push(left);
    heap.push(right);
    ++panels;
    if (!finite(total)) throw QuadratureError("integrate: non-finite integrand");
  }
  // Deterministic re-summation in panel order.
  std::vector<Panel> all;
  all.reserve(heap.size());
  double err_sum = 0.0;
  while (!heap.empty()) {
    all.push_back(heap.top());
    heap.pop();
  }
  std::sort(all.begin(), all.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  std::vector<Complex> values;
  values.reserve(all.size());
  for (const auto& p : all) {
    values.push_back(p.value);
    err_sum += p.error;
  }
  return {stable_sum(values), err_sum, panels};
}

}  // namespace resurgence
