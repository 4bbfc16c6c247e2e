#include <doctest.h>

#include <cmath>
#include <numbers>

#include "resurgence/alien.hpp"

using namespace resurgence;
using std::numbers::pi;

TEST_CASE("first singularity of the lambda minor is a copy of its germ") {
  const BorelFunction f = BorelFunction::make(BorelKind::minor_lambda_3_2);
  const GermComparison g = compare_germ(alien_plus(f, Complex(0.0, 2.0 * pi)), f);
  CHECK(g.samples.size() == kGermRadii.size() * kGermAngleOffsets.size());
  CHECK(std::abs(g.mean_ratio - 1.0) < 1e-8);
  CHECK(g.ratio_spread < 1e-8);
}

TEST_CASE("chi minor has the mirrored singularity") {
  const BorelFunction f = BorelFunction::make(BorelKind::minor_chi);
  const GermComparison g = compare_germ(alien_plus(f, Complex(0.0, -2.0 * pi)), f);
  CHECK(g.ratio_spread < 1e-8);
  CHECK(std::abs(g.mean_ratio) > 0.5);
}

TEST_CASE("errors") {
  const BorelFunction f = BorelFunction::make(BorelKind::minor_lambda_3_2);
  CHECK_THROWS_AS(alien_plus(f, 0.0), DomainError);
  CHECK_THROWS_AS(alien(f, Complex(1.0, 2.0 * pi)), DomainError);
  CHECK_THROWS_AS(alien_plus(BorelFunction::make(BorelKind::minor_mu), Complex(0.0, 2.0 * pi)), DomainError);
  CHECK_THROWS_AS(compare_germ(alien_plus(f, Complex(0.0, 2.0 * pi)), f, {}, {}), DomainError);
}
