#include <doctest.h>

#include <cmath>
#include <numbers>

#include "resurgence/branch_tracking.hpp"
#include "resurgence/lambert_w.hpp"

using namespace resurgence;
using std::numbers::pi;

TEST_CASE("anchor labels") {
  CHECK(BranchTracker(BorelFamily::lambda).anchor_labels() == BranchLabels{0, -1});
  CHECK(BranchTracker(BorelFamily::chi).anchor_labels() == BranchLabels{-1, 0});
  CHECK(BranchTracker(BorelFamily::lambda).anchor_theta() == 0.0);
  CHECK(BranchTracker(BorelFamily::chi).anchor_theta() == doctest::Approx(-pi));
}

TEST_CASE("one turn around the origin swaps the two sheets") {
  for (const BorelFamily fam : {BorelFamily::lambda, BorelFamily::chi}) {
    const BranchTracker t(fam);
    const double th = t.anchor_theta();
    const SheetPair s0 = t.anchor_state(1.0);
    const SheetPair s1 = t.follow(Curve::arc(0.0, 1.0, th, th + 2.0 * pi), s0);
    CHECK(std::abs(s1.a - s0.b) < 1e-12);
    CHECK(std::abs(s1.b - s0.a) < 1e-12);
  }
}

TEST_CASE("cut crossings of a vertical segment") {
  const Curve c = Curve::segment({1.0, -1.0}, {1.0, 14.0});
  const auto t = c.cut_crossings();
  REQUIRE(t.size() == 3);
  CHECK(t[0] == doctest::Approx(1.0 / 15.0));
  CHECK(t[1] == doctest::Approx((2.0 * pi + 1.0) / 15.0));
  CHECK(t[2] == doctest::Approx((4.0 * pi + 1.0) / 15.0));
  CHECK(Curve::segment(1.0, 2.0).cut_crossings().empty());
}

TEST_CASE("property: labels name the W branch of the tracked values") {
  for (const BorelFamily fam : {BorelFamily::lambda, BorelFamily::chi}) {
    const BranchTracker tr(fam);
    const Path approach = canonical_path(fam, SurfacePoint{2.0, 0.3});
    SheetPair s = tr.follow(approach, tr.anchor_state(canonical_anchor_radius(2.0)));
    const Curve up = Curve::segment(std::polar(2.0, 0.3), Complex(1.0, 15.0));
    const LabeledCurve lc = tr.label(up, s);
    CHECK(lc.pieces().size() >= 3);
    for (int j = 0; j <= 50; ++j) {
      const double t = j / 50.0;
      const Complex xi = up.at(t);
      if (std::abs(std::remainder(xi.imag(), 2.0 * pi)) < 1e-6) continue;
      const SheetPair v = lc.at(t);
      const BranchLabels l = lc.labels_at(t);
      const Complex y = tr.y(xi);
      CHECK(std::abs(v.a - lambert_w(y, l.a).w) < 1e-10);
      CHECK(std::abs(v.b - lambert_w(y, l.b).w) < 1e-10);
    }
    const SheetPair ode = tr.follow(up, s);
    CHECK(std::abs(ode.a - lc.end_state().a) < 1e-9);
    CHECK(std::abs(ode.b - lc.end_state().b) < 1e-9);
  }
}

TEST_CASE("proximity guard") {
  CHECK_THROWS_AS(BranchTracker::check_proximity(Complex(1e-7, 2.0 * pi)), ProximityError);
  CHECK_THROWS_AS(BranchTracker::check_proximity(Complex(0.0, -4.0 * pi)), ProximityError);
  CHECK_NOTHROW(BranchTracker::check_proximity(Complex(1e-3, 2.0 * pi)));
  CHECK_NOTHROW(BranchTracker::check_proximity(Complex(0.5, 0.0)));
}

TEST_CASE("canonical path") {
  const Path p = canonical_path(BorelFamily::lambda, SurfacePoint{5.0, 1.0});
  REQUIRE(!p.empty());
  CHECK(std::abs(p.back().at(1.0) - std::polar(5.0, 1.0)) < 1e-12);
  CHECK(canonical_anchor_radius(0.5) == doctest::Approx(0.5));
  CHECK(canonical_anchor_radius(50.0) == doctest::Approx(pi));
}
