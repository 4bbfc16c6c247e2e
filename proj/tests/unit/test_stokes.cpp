#include <doctest.h>

#include <cmath>
#include <numbers>

#include "resurgence/stokes.hpp"

using namespace resurgence;
using std::numbers::pi;

TEST_CASE("lateral sums and the reflection formula") {
  const QuadratureSpec spec;
  for (const Complex z : {std::polar(2.0, -pi / 4.0), std::polar(1.0, -2.5), Complex(0.5, -0.7)}) {
    const StokesRecord r = stokes_record(z, spec);
    CHECK(r.theta1 == doctest::Approx(-std::arg(z) / 2.0));
    CHECK(r.theta2 == doctest::Approx((pi - std::arg(z)) / 2.0));
    CHECK(std::abs(r.factor - (1.0 - std::exp(Complex(0.0, -2.0 * pi) * z))) < 1e-14 * std::abs(r.factor));
    CHECK(r.identity_residual < 1e-10);
    CHECK(r.reflection_residual < 1e-10);
    CHECK(r.oracle_error < 1e-10);
  }
}

TEST_CASE("domain") {
  const QuadratureSpec spec;
  CHECK_THROWS_AS(stokes_record(Complex(1.0, 1.0), spec), DomainError);
  CHECK_THROWS_AS(stokes_record(Complex(2.0, -1e-4), spec), DomainError);
  CHECK_THROWS_AS(stokes_record(-2.0, spec), DomainError);
}
