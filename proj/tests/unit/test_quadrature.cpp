#include <doctest.h>

#include <cmath>
#include <numbers>

#include "resurgence/quadrature.hpp"

using namespace resurgence;
using std::numbers::pi;

TEST_CASE("polynomials up to degree 13 are settled on one panel") {
  const auto f = [](double x) { return Complex(std::pow(x, 13), 1.0); };
  const QuadratureResult r = integrate(f, 0.0, 1.0, 1e-14, 0.0, 1);
  CHECK(std::abs(r.value - Complex(1.0 / 14.0, 1.0)) < 1e-15);
  CHECK(r.panels == 1);
}

TEST_CASE("endpoint square-root singularity") {
  const auto f = [](double x) { return Complex(std::sqrt(x)); };
  const QuadratureResult r = integrate(f, 0.0, 1.0, 1e-12, 1e-15, 500);
  CHECK(std::abs(r.value - 2.0 / 3.0) < 1e-12);
}

TEST_CASE("oscillatory complex integrand") {
  const auto f = [](double x) { return std::exp(Complex(0.0, 40.0 * x)); };
  const QuadratureResult r = integrate(f, 0.0, pi, 1e-13, 1e-15, 500);
  const Complex exact = (std::exp(Complex(0.0, 40.0 * pi)) - 1.0) / Complex(0.0, 40.0);
  CHECK(std::abs(r.value - exact) < 1e-13);
}

TEST_CASE("reported error bounds the true error") {
  const auto f = [](double x) { return Complex(1.0 / (1e-3 + x * x)); };
  const QuadratureResult r = integrate(f, -1.0, 1.0, 1e-10, 0.0, 2000);
  const double exact = 2.0 * std::atan(1.0 / std::sqrt(1e-3)) / std::sqrt(1e-3);
  CHECK(std::abs(r.value.real() - exact) <= std::max(r.est_error, 1e-13 * exact));
}

TEST_CASE("deterministic: repeated runs agree bit for bit") {
  const auto f = [](double x) { return std::exp(Complex(-x, 3.0 * x)) * std::log1p(x); };
  const QuadratureResult a = integrate(f, 0.0, 20.0, 1e-12, 1e-15, 500);
  const QuadratureResult b = integrate(f, 0.0, 20.0, 1e-12, 1e-15, 500);
  CHECK(a.value == b.value);
  CHECK(a.panels == b.panels);
}

TEST_CASE("subdivision budget exhaustion throws") {
  const auto f = [](double x) { return Complex(std::sin(1.0 / (x + 1e-9))); };
  CHECK_THROWS_AS(integrate(f, 0.0, 1.0, 1e-14, 0.0, 5), QuadratureError);
}

TEST_CASE("compensated sum") {
  std::vector<Complex> t = {1e16, 1.0, -1e16, 1.0};
  CHECK(stable_sum(t) == Complex(2.0));
}

TEST_CASE("spec validation") {
  QuadratureSpec s;
  CHECK_NOTHROW(s.validate());
  s.hankel_delta = 7.0;
  CHECK_THROWS_AS(s.validate(), DomainError);
  s = QuadratureSpec{};
  s.rel_tol = -1.0;
  CHECK_THROWS_AS(s.validate(), DomainError);
}
