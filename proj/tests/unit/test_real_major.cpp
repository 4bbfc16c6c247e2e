#include <doctest.h>

#include <cmath>
#include <numbers>

#include "resurgence/real_major.hpp"

using namespace resurgence;
using std::numbers::pi;

namespace {

const QuadratureSpec kSpec{};

// -d/dxi by a five-point stencil.
Complex minus_derivative(RealMajorKind kind, double c, Complex xi, double h) {
  auto f = [&](Complex x) {
    return kind == RealMajorKind::lambda ? rho_lambda_c(c, x, kSpec).value : rho_nu_c(c, x, kSpec).value;
  };
  return -(f(xi - 2.0 * h) - 8.0 * f(xi - h) + 8.0 * f(xi + h) - f(xi + 2.0 * h)) / (12.0 * h);
}

}  // namespace

TEST_CASE("real roots of e^Q - Q - 1 = s") {
  for (const double s : {1e-4, 0.01, 1.0, 30.0}) {
    const auto [lo, hi] = real_roots(s);
    CHECK(lo < 0.0);
    CHECK(hi > 0.0);
    CHECK(std::abs(std::expm1(lo) - lo - s) < 1e-14 * (1.0 + s));
    CHECK(std::abs(std::expm1(hi) - hi - s) < 1e-14 * (1.0 + s));
  }
  const auto [lo, hi] = real_roots(0.01);
  CHECK(lo == doctest::Approx(-std::sqrt(0.02)).epsilon(0.03));
  CHECK(hi == doctest::Approx(std::sqrt(0.02)).epsilon(0.03));
  CHECK_THROWS_AS(real_roots(0.0), DomainError);
}

TEST_CASE("property: lowering c differentiates") {
  for (const double c : {0.0, 0.25, -0.5}) {
    for (const Complex xi : {Complex(1.5), Complex(0.7, 0.9)}) {
      const Complex lower = rho_lambda_c(c - 1.0, xi, kSpec).value;
      CHECK(std::abs(minus_derivative(RealMajorKind::lambda, c, xi, 1e-3) - lower) < 1e-8 * std::abs(lower));
    }
  }
  const Complex xi(2.0, -0.5);
  const Complex lower = rho_nu_c(-1.0, xi, kSpec).value;
  CHECK(std::abs(minus_derivative(RealMajorKind::nu, 0.0, xi, 1e-3) - lower) < 1e-8 * std::abs(lower));
}

TEST_CASE("positive and decreasing on the positive axis") {
  double prev = INFINITY;
  for (const double xi : {0.01, 0.1, 1.0, 10.0, 100.0}) {
    const Complex v = rho_lambda_c(0.0, xi, kSpec).value;
    CHECK(std::abs(v.imag()) < 1e-14 * v.real());
    CHECK(v.real() > 0.0);
    CHECK(v.real() < prev);
    prev = v.real();
  }
}

TEST_CASE("large-xi decay has exponent -1/2") {
  const double a = rho_lambda_c(0.0, 1e4, kSpec).value.real();
  const double b = rho_lambda_c(0.0, 1e5, kSpec).value.real();
  CHECK(std::log10(b / a) == doctest::Approx(-0.5).epsilon(0.02));
}

TEST_CASE("property: conjugate mirror for real c") {
  for (const Complex xi : {Complex(0.5, 1.0), Complex(-2.0, 0.3), Complex(-0.1, -3.0)}) {
    const Complex a = rho_lambda_c(0.0, xi, kSpec).value;
    const Complex b = rho_lambda_c(0.0, std::conj(xi), kSpec).value;
    CHECK(std::abs(a - std::conj(b)) < 1e-12 * std::abs(a));
  }
}

TEST_CASE("axis values are the limits from either side") {
  for (const double s : {0.5, 3.0}) {
    const Complex up = rho_lambda_c_axis(0.0, s, +1, kSpec).value;
    const Complex down = rho_lambda_c_axis(0.0, s, -1, kSpec).value;
    CHECK(std::abs(up - std::conj(down)) < 1e-12 * std::abs(up));
    const Complex near = rho_lambda_c(0.0, std::polar(s, pi - 1e-7), kSpec).value;
    CHECK(std::abs(near - up) < 1e-5 * std::abs(up));
  }
  CHECK_THROWS_AS(rho_lambda_c_axis(0.0, -1.0, 1, kSpec), DomainError);
}

TEST_CASE("continuation inside the principal sheet reproduces the direct integral") {
  const std::vector<Complex> path = {1.0, Complex(2.0, 1.0), Complex(-1.5, 2.0)};
  const Complex cont = rho_continue(0.0, path, kSpec).value;
  const Complex direct = rho_lambda_c(0.0, Complex(-1.5, 2.0), kSpec).value;
  CHECK(std::abs(cont - direct) < 1e-11 * std::abs(direct));
}

TEST_CASE("continuation guards") {
  CHECK_THROWS_AS(rho_continue(0.0, {}, kSpec), DomainError);
  CHECK_THROWS_AS(rho_continue(0.0, {-1.0, Complex(-1.0, 1.0)}, kSpec), DomainError);
  CHECK_THROWS_AS(rho_continue(0.0, {1.0, 20.0}, kSpec), DomainError);
  CHECK_THROWS_AS(rho_continue(0.0, {Complex(0.0, 1.0), Complex(0.0, 2.0 * pi)}, kSpec), ProximityError);
  CHECK_THROWS_AS(rho_lambda_c(0.75, 1.0, kSpec), DomainError);
  CHECK_THROWS_AS(rho_nu_c(1.0, 1.0, kSpec), DomainError);
  CHECK_THROWS_AS(rho_lambda_c(0.0, -2.0, kSpec), DomainError);
}

TEST_CASE("arc path endpoints and step") {
  const auto p = arc_path(2.0, 0.0, 3.0, 0.1);
  CHECK(std::abs(p.front() - 2.0) < 1e-15);
  CHECK(std::abs(p.back() - std::polar(2.0, 3.0)) < 1e-14);
  for (std::size_t i = 1; i < p.size(); ++i) CHECK(std::abs(p[i] - p[i - 1]) <= 2.0 * 0.1 + 1e-12);
}

TEST_CASE("lambda_1 contour minor") {
  CHECK(std::abs(minor_lambda1_contour(0.0, kSpec) - 1.0) < 1e-13);
  const Complex xi(0.3, 0.4);
  CHECK(std::abs(minor_lambda1_contour(std::conj(xi), kSpec) - std::conj(minor_lambda1_contour(xi, kSpec))) < 1e-13);
}

TEST_CASE("surface provider") {
  const RhoMajor m(0.0, kSpec);
  CHECK(std::abs(m.at({2.0, 0.5}) - rho_lambda_c(0.0, std::polar(2.0, 0.5), kSpec).value) < 1e-14);
  CHECK(std::abs(m.at({2.0, pi}) - rho_lambda_c_axis(0.0, 2.0, 1, kSpec).value) < 1e-14);
  CHECK(m.growth().A == 0.0);
}
