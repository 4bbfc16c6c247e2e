#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "resurgence/borel_plane.hpp"

using namespace resurgence;
using std::numbers::pi;

namespace {

const double kSqrt2Pi = std::sqrt(2.0 * pi);

// Roots q < 1 < q' of q - 1 - log q = xi by bracketed Newton.
std::pair<double, double> q_roots(double xi) {
  auto solve = [xi](double q) {
    for (int i = 0; i < 100; ++i) q -= (q - 1.0 - std::log(q) - xi) / (1.0 - 1.0 / q);
    return q;
  };
  return {solve(std::exp(-1.0 - xi)), solve(2.0 + 2.0 * xi)};
}

}  // namespace

TEST_CASE("lambda minor on the real axis from the q-equation") {
  for (const double xi : {0.01, 0.3, 2.0, 9.0}) {
    const auto [lo, hi] = q_roots(xi);
    const Complex v = minor_lambda32({xi, 0.0});
    CHECK(std::abs(v - (hi - lo) / kSqrt2Pi) < 1e-13 * (hi - lo));
    CHECK(std::abs(major_lambda32({xi, 0.0}) + lo / kSqrt2Pi) < 1e-14);
  }
}

TEST_CASE("chi minor on its anchor ray") {
  for (const double s : {0.05, 1.0, 4.0}) {
    const auto [lo, hi] = q_roots(s);
    CHECK(std::abs(minor_chi({s, -pi}) - Complex(0.0, -(hi - lo) / kSqrt2Pi)) < 1e-13);
  }
}

TEST_CASE("mu minor") {
  CHECK(std::abs(minor_mu(1e-3) - (1.0 / 12.0 - 1e-6 / 720.0)) < 1e-15);
  const Complex xi(0.7, -0.4);
  const Complex ref = ((xi / 2.0) * std::cosh(xi / 2.0) / std::sinh(xi / 2.0) - 1.0) / (xi * xi);
  CHECK(std::abs(minor_mu(xi) - ref) < 1e-14);
  CHECK_THROWS_AS(minor_mu(Complex(1e-9, 2.0 * pi)), ProximityError);
  CHECK_THROWS_AS(minor_mu(Complex(0.0, -6.0 * pi)), ProximityError);
}

TEST_CASE("property: minor is the variation of the major") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> rad(0.1, 8.0), ang(-3.0, 3.0);
  for (int k = 0; k < 40; ++k) {
    const double r = rad(rng), th = ang(rng);
    const Complex m = minor_lambda32({r, th});
    const Complex v = major_lambda32({r, th}) - major_lambda32({r, th - 2.0 * pi});
    CHECK(std::abs(v - m) <= 1e-11 * std::abs(m));
  }
}

TEST_CASE("property: minors change sign after a full turn") {
  for (const double th : {0.2, 1.0, -0.7}) {
    const Complex a = minor_lambda32({1.5, th});
    const Complex b = minor_lambda32({1.5, th + 2.0 * pi});
    CHECK(std::abs(a + b) < 1e-12);
  }
}

TEST_CASE("property: conjugate symmetry of the lambda minor") {
  for (const double th : {0.3, 1.2, 2.5, 4.0}) {
    const Complex a = minor_lambda32({2.0, th});
    const Complex b = minor_lambda32({2.0, -th});
    CHECK(std::abs(a - std::conj(b)) < 1e-12);
  }
}

TEST_CASE("straight continuation with no detours matches the canonical value") {
  const BorelFunction f = BorelFunction::make(BorelKind::minor_lambda_3_2);
  const BranchPath path{0.0, {}, 1.0};
  CHECK(std::abs(continue_minor(f, path, Complex(3.0, 0.2)) - minor_lambda32(SurfacePoint::from_complex({3.0, 0.2}))) < 1e-12);
}

TEST_CASE("branch path validation") {
  BranchPath p{pi / 2.0, {{0, DetourSide::right}}, 1.0};
  CHECK_THROWS_AS(p.validate(), TrackingError);
  p.detours = {{2, DetourSide::left}, {1, DetourSide::right}};
  CHECK_THROWS_AS(p.validate(), TrackingError);
  p.detours = {{-1, DetourSide::left}};
  CHECK_THROWS_AS(p.validate(), TrackingError);
  p.detours = {{1, DetourSide::left}, {2, DetourSide::right}};
  CHECK_NOTHROW(p.validate());
}

TEST_CASE("grid sampling marks the origin and the excluded disks") {
  const BorelFunction f = BorelFunction::make(BorelKind::minor_mu);
  GridSpec g;
  g.re_min = 0.0;
  g.re_max = 0.0;
  g.n_re = 1;
  g.im_min = 0.0;
  g.im_max = 2.0 * pi;
  g.n_im = 3;
  const auto s = sample_grid(f, g);
  REQUIRE(s.size() == 3);
  CHECK(s[0].kind == "origin");
  CHECK(s[1].kind == "value");
  CHECK(s[2].kind == "proximity");
  g.n_im = 0;
  CHECK_THROWS_AS(sample_grid(f, g), DomainError);
}

TEST_CASE("kinds") {
  CHECK(BorelFunction::make(BorelKind::major_chi).is_major());
  CHECK(BorelFunction::make(BorelKind::minor_mu).is_minor());
  CHECK_THROWS_AS(BorelFunction::make(BorelKind::minor_mu).family(), DomainError);
}
