#include <doctest.h>

#include <cmath>
#include <numbers>

#include "resurgence/laplace.hpp"
#include "resurgence/reference.hpp"

using namespace resurgence;
using std::numbers::pi;

namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("ray transform of monomials") {
  const QuadratureSpec spec;
  for (const Complex z : {Complex(2.0), Complex(1.0, 1.5)}) {
    const auto one = [](double) { return Complex(1.0); };
    CHECK(rel(laplace_ray(one, Direction{0.0}, z, spec, {0.0, 1.0}).value, 1.0 / z) < 1e-12);
    const auto sq = [](double r) { return Complex(r * r); };
    CHECK(rel(laplace_ray(sq, Direction{0.0}, z, spec, {0.0, 1.0}).value, 2.0 / (z * z * z)) < 1e-11);
  }
}

TEST_CASE("rotated ray transform") {
  const QuadratureSpec spec;
  const double th = 0.8;
  const auto f = [th](double r) { return std::exp(-std::polar(r, th)); };
  const Complex z(1.0, -1.0);
  CHECK(rel(laplace_ray(f, Direction{th}, z, spec, {0.0, 1.0}).value, 1.0 / (z + 1.0)) < 1e-12);
  CHECK_THROWS_AS(laplace_ray(f, Direction{th}, Complex(-1.0, 1.0), spec, {0.0, 1.0}), DomainError);
}

TEST_CASE("Hankel transform of monomial majors gives z^-c") {
  const QuadratureSpec spec;
  for (const double c : {0.5, 1.0, 1.5, 2.0, -0.5, -1.5}) {
    const MonomialMajor m(c);
    for (const Complex z : {Complex(2.0), Complex(3.0, -1.0)}) {
      const Complex ref = std::pow(z, -c);
      CHECK(rel(laplace_hankel(m, Direction{0.0}, z, spec).value, ref) < 1e-10);
    }
  }
  CHECK_THROWS_AS(MonomialMajor(0.0), DomainError);
  CHECK_THROWS_AS(MonomialMajor(-2.0), DomainError);
}

TEST_CASE("lambda minor transform against the Gamma oracle") {
  const QuadratureSpec spec;
  const BorelFunction f = BorelFunction::make(BorelKind::minor_lambda_3_2);
  for (const Complex z : {Complex(4.0), Complex(2.0, -2.0)}) {
    const Complex ref = std::pow(z, -1.5) * lambda_ref(z);
    CHECK(rel(laplace_ray(f, Direction{0.0}, z, spec).value, ref) < 1e-10);
  }
  CHECK_THROWS_AS(laplace_ray(BorelFunction::make(BorelKind::major_chi), Direction{0.0}, 2.0, spec), DomainError);
}

TEST_CASE("truncation radius meets its bound") {
  const GrowthCertificate g{1.0, 3.0};
  for (const double kappa : {0.1, 1.0, 5.0}) {
    const double R = truncation_radius(kappa, g, 1e-15, 1e6);
    CHECK(std::exp(-kappa * R) * ((g.A * R + g.B) / kappa + g.A / (kappa * kappa)) <= 1e-15 * (1.0 + 1e-9));
  }
  CHECK_THROWS_AS(truncation_radius(0.0, g, 1e-15, 400.0), DomainError);
  CHECK_THROWS_AS(truncation_radius(1e-3, g, 1e-15, 400.0), QuadratureError);
}

TEST_CASE("certified half-plane") {
  const QuadratureSpec spec;
  const HalfPlane h = certified_half_plane(Direction{0.3}, GrowthCertificate{}, spec);
  CHECK(h.tau >= 0.0);
  CHECK(h.contains(std::polar(h.tau + 1.0, -0.3)));
  CHECK(!h.contains(std::polar(h.tau + 1.0, -0.3 + pi)));
}

TEST_CASE("gluing detects jumps") {
  std::vector<std::pair<Direction, Complex>> same = {{{-0.2}, 1.0}, {{0.1}, 1.0 + 1e-14}, {{0.4}, 1.0}};
  CHECK(glue_directions(same, 1e-12).consistent);
  std::vector<std::pair<Direction, Complex>> jump = {{{-0.2}, 1.0}, {{1.9}, 1.1}};
  const GlueReport r = glue_directions(jump, 1e-12);
  CHECK(!r.consistent);
  CHECK(r.max_mismatch == doctest::Approx(0.1 / 1.1));
}

TEST_CASE("sector evaluator picks the best direction in its interval") {
  const QuadratureSpec spec;
  const SectorLaplace s(BorelFunction::make(BorelKind::minor_lambda_3_2), -1.0, 1.0, spec);
  CHECK(s.direction_for(std::polar(3.0, -0.5)) == doctest::Approx(0.5));
  CHECK(s.direction_for(std::polar(3.0, 2.0)) == doctest::Approx(-1.0));
  const Complex z = std::polar(3.0, 1.2);
  CHECK(rel(s(z).value, std::pow(z, -1.5) * lambda_ref(z)) < 1e-10);
  CHECK_THROWS_AS(SectorLaplace(BorelFunction::make(BorelKind::minor_chi), 1.0, 0.0, spec), DomainError);
}
