#include "resurgence/lambert_w.hpp"

#include <array>
#include <limits>
#include <string>
#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

namespace resurgence {

namespace {

using std::numbers::e;
using std::numbers::pi;

constexpr int kMaxIterations = 64;
constexpr Complex kI{0.0, 1.0};

double relative_residual(Complex w, Complex x) {
  const double r = std::abs(w * std::exp(w) - x);
  return std::abs(x) > 0.0 ? r / std::abs(x) : std::abs(w);
}

// Halley iteration on f(w) = w e^w - x.
std::optional<Complex> halley(Complex x, Complex w) {
  for (int it = 0; it < kMaxIterations; ++it) {
    const Complex ew = std::exp(w);
    const Complex f = w * ew - x;
    const Complex wp1 = w + 1.0;
    if (std::abs(wp1) == 0.0) return std::nullopt;
    const Complex denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    if (!std::isfinite(denom.real()) || !std::isfinite(denom.imag()) || std::abs(denom) == 0.0) {
      return std::nullopt;
    }
    const Complex step = f / denom;
    w -= step;
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return std::nullopt;
    if (std::abs(step) <= 4e-16 * (1.0 + std::abs(w))) return w;
  }
  return w;  // residual check decides
}

Complex branch_point_series(Complex p, double s) {
  // w = -1 + s p - p^2/3 + (11/72) s p^3 - (43/540) p^4
  const Complex sp = s * p;
  return -1.0 + sp * (1.0 + sp * (-1.0 / 3.0 + sp * (11.0 / 72.0 + sp * (-43.0 / 540.0))));
}

Complex branch_point_parameter(Complex x) { return std::sqrt(2.0 * (e * x + 1.0)); }

Complex asymptotic_seed(Complex x, int k) {
  const Complex l1 = std::log(x) + 2.0 * pi * k * kI;
  if (std::abs(l1) < 1e-8) return l1;
  const Complex l2 = std::log(l1);
  return l1 - l2 + l2 / l1;
}

bool on_negative_real_axis(Complex x) { return x.imag() == 0.0 && x.real() < 0.0; }

// Branch test that resolves cut points by nudging into the upper half plane.
int branch_of_solution(Complex w, Complex x) {
  if (!on_negative_real_axis(x)) return lambert_branch_of(w);
  const Complex dx = kI * (1e-7 * std::abs(x));
  const Complex dw = dx * w / (x * (1.0 + w));
  return lambert_branch_of(w + dw);
}

bool seeds_branch_point(Complex x, int k) {
  if (std::abs(x + 1.0 / e) >= 0.25) return false;
  if (k == 0) return true;
  if (k == -1) return x.imag() >= 0.0;
  if (k == 1) return x.imag() < 0.0;
  return false;
}

struct Seed {
  Complex w;
  bool trusted;  // close enough to the branch point that the sheet is fixed by the seed
};

std::vector<Seed> seeds_for(Complex x, int k) {
  std::vector<Seed> seeds;
  if (seeds_branch_point(x, k)) {
    const Complex p = branch_point_parameter(x);
    seeds.push_back({branch_point_series(p, k == 0 ? 1.0 : -1.0), std::abs(p) < 0.05});
  }
  if (k == 0 && std::abs(x) <= 3.0) {
    const Complex l = std::log(1.0 + x);
    seeds.push_back({l * (1.0 - std::log(1.0 + l) / (2.0 + l)), false});
    seeds.push_back({x, false});
  }
  seeds.push_back({asymptotic_seed(x, k), false});
  // Fallbacks spread over the band of branch k.
  const auto [lo, hi] = lambert_branch_strip(k);
  for (double fv : {0.5, 0.25, 0.75, 0.1, 0.9}) {
    for (double u : {-1.0, 0.0, std::log(std::abs(x) + 1e-300), -4.0, 2.0}) {
      seeds.push_back({Complex(u, lo + fv * (hi - lo)), false});
    }
  }
  return seeds;
}

}  // namespace

std::pair<double, double> lambert_branch_strip(int k) {
  if (k == 0) return {-pi, pi};
  if (k > 0) return {(2 * k - 2) * pi, (2 * k + 1) * pi};
  return {(2 * k - 1) * pi, (2 * k + 2) * pi};
}

// The branch ranges are separated by the curves u = -v cot v (images of the
// cuts) and, between W_{-1} and W_1, by the real half-line w < -1.
int lambert_branch_of(Complex w) {
  const double u = w.real();
  const double v = w.imag();
  if (v == 0.0) return u >= -1.0 ? 0 : -1;
  const double av = std::abs(v);
  const auto boundary = [](double t) { return -t / std::tan(t); };
  if (av < pi && u >= boundary(av)) return 0;
  int k = 1;
  for (int j = 2;; ++j) {
    const double a = 2.0 * (j - 1) * pi;
    const bool above = av >= a + pi || (av > a && u < boundary(av));
    if (!above) break;
    k = j;
  }
  return v > 0.0 ? k : -k;
}

WValue lambert_w(Complex x, int k, double tol) {
  if (!(tol > 0.0)) throw DomainError("lambert_w: tolerance must be positive");
  if (x.imag() == 0.0) x.imag(0.0);  // -0 would select the lower side in sqrt and log
  if (x == Complex(0.0, 0.0)) {
    if (k != 0) throw DomainError("lambert_w: x = 0 is a singular point of every branch k != 0");
    return {Complex(0.0, 0.0), 0, 0.0};
  }
  if (std::abs(x + 1.0 / e) < 1e-300 && (k == 0 || (k == -1 && x.imag() >= 0.0) ||
                                          (k == 1 && x.imag() < 0.0))) {
    return {Complex(-1.0, 0.0), k, relative_residual(Complex(-1.0, 0.0), x)};
  }
  Complex best = 0.0;
  double best_res = std::numeric_limits<double>::infinity();
  for (const Seed& seed : seeds_for(x, k)) {
    const auto w = halley(x, seed.w);
    if (!w) continue;
    const double res = relative_residual(*w, x);
    if (!seed.trusted && branch_of_solution(*w, x) != k) continue;
    if (res <= tol) return {*w, k, res};
    if (res < best_res) {
      best = *w;
      best_res = res;
    }
  }
  throw ConvergenceError("lambert_w: no seed converged on branch " + std::to_string(k), best,
                         best_res);
}

WValue lambert_w_near_branch_point(Complex x, Sign sheet, double tol) {
  if (!(tol > 0.0)) throw DomainError("lambert_w: tolerance must be positive");
  if (x.imag() == 0.0) x.imag(0.0);
  const double s = sheet == Sign::plus ? 1.0 : -1.0;
  const Complex p = branch_point_parameter(x);
  const int branch = sheet == Sign::plus ? 0 : (x.imag() >= 0.0 ? -1 : 1);
  if (std::abs(p) == 0.0) return {Complex(-1.0, 0.0), branch, relative_residual(-1.0, x)};
  const auto w = halley(x, branch_point_series(p, s));
  if (!w) throw ConvergenceError("lambert_w_near_branch_point: iteration failed", p, 1.0);
  const double res = relative_residual(*w, x);
  if (res > tol) {
    throw ConvergenceError("lambert_w_near_branch_point: residual above tolerance", *w, res);
  }
  return {*w, branch, res};
}

}  // namespace resurgence
