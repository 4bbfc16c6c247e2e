#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "resurgence/quadrature.hpp"
#include "resurgence/reference.hpp"

using namespace resurgence;
using std::numbers::e;
using std::numbers::pi;

TEST_CASE("Gamma at simple points") {
  CHECK(std::abs(gamma_ref(2.0).value - 1.0) < 1e-14);
  CHECK(std::abs(gamma_ref(0.5).value - std::sqrt(pi)) < 1e-14);
  CHECK(std::abs(gamma_ref(-0.5).value + 2.0 * std::sqrt(pi)) < 1e-13);
  CHECK_THROWS_AS(gamma_ref(0.0), DomainError);
  CHECK_THROWS_AS(gamma_ref(-3.0), DomainError);
}

TEST_CASE("Gamma against the Euler integral") {
  for (const double x : {1.3, 3.7, 6.25, 9.5}) {
    const auto f = [x](double t) { return Complex(std::pow(t, x - 1.0) * std::exp(-t)); };
    const Complex q = integrate(f, 0.0, 1.0, 1e-14, 0.0, 2000).value + integrate(f, 1.0, 200.0, 1e-14, 0.0, 2000).value;
    CHECK(std::abs(gamma_ref(x).value - q) / std::abs(q) < 1e-10);
  }
}

TEST_CASE("property: functional equation on random samples") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> re(-8.0, 12.0), im(-10.0, 10.0);
  for (int trial = 0; trial < 500; ++trial) {
    const Complex z(re(rng), im(rng));
    if (std::abs(z.imag()) < 1e-3 && z.real() < 0.5) continue;
    const Complex g1 = gamma_ref(z + 1.0).value, g0 = gamma_ref(z).value;
    CHECK(std::abs(g1 - z * g0) <= 1e-12 * std::abs(g1));
  }
}

TEST_CASE("reflection residuals") {
  CHECK(reflection_check(0.5) < 1e-14);
  CHECK(reflection_check({0.3, 0.4}) < 1e-12);
  CHECK(reflection_check(-1.2) < 1e-12);
}

TEST_CASE("normalized functions") {
  CHECK(std::abs(lambda_ref(1.0) - e / std::sqrt(2.0 * pi)) < 1e-14);
  CHECK(std::abs(lambda_ref(1e6) - 1.0) < 1e-6);
  const double small = std::tgamma(1.01) * std::pow(0.01, -0.01) * std::exp(0.01);
  CHECK(std::abs(lambda_ref(0.01) * 0.1 * std::sqrt(2.0 * pi) - small) < 1e-13);
  CHECK(std::abs(nu_ref(0.5) - std::exp(0.5) / std::sqrt(0.5) / std::sqrt(2.0 * pi)) < 1e-14);
  CHECK(std::abs(nu_ref(1e6) - 1.0) < 1e-6);
  const Complex g25 = gamma_ref(2.5).value;
  CHECK(std::abs(nu_ref(2.0) - g25 / (std::sqrt(2.0 * pi) * 4.0 * std::exp(-2.0))) < 1e-14);
  CHECK(std::abs(lambda_ref(2.0, 1.0) - lambda_ref(2.0) / 2.0) < 1e-15);
}
