#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "resurgence/lambert_w.hpp"

using namespace resurgence;
using std::numbers::e;
using std::numbers::pi;

namespace {

// Reference values from an independent implementation (CGH branch conventions).
struct Vector {
  Complex x;
  int k;
  Complex w;
};

const Vector kVectors[] = {
    {e, 0, 1.0},
    {-0.1, -1, -3.577152063957297},
    {-0.1, 0, -0.11183255915896297},
    {-0.1, 1, {-4.44909817870089, 7.3070607892176085}},
    {{2.0, -5.0}, 3, {-1.0925336482167838, 16.020378579121605}},
    {{1.0, 1.0}, 0, {0.6569660692304364, 0.325450339413415}},
};

}  // namespace

TEST_CASE("Lambert W reference values") {
  for (const Vector& v : kVectors) {
    const WValue r = lambert_w(v.x, v.k);
    CHECK(std::abs(r.w - v.w) <= 1e-13 * std::abs(v.w));
    CHECK(r.branch == v.k);
  }
}

TEST_CASE("branch point -1/e") {
  const Complex x = -1.0 / e;
  CHECK(std::abs(lambert_w(x, 0).w + 1.0) < 1e-7);
  CHECK(std::abs(lambert_w(x, -1).w + 1.0) < 1e-7);
  const Complex near = x + 1e-9;
  CHECK(std::abs(lambert_w_near_branch_point(near, Sign::plus).w - lambert_w(near, 0).w) < 1e-10);
  CHECK(std::abs(lambert_w_near_branch_point(near, Sign::minus).w - lambert_w(near, -1).w) < 1e-10);
}

TEST_CASE("cuts take the limit from above") {
  const Complex x = -2.0;
  for (const int k : {-2, -1, 0, 1, 2}) {
    const Complex on = lambert_w(x, k).w;
    const Complex above = lambert_w(Complex(-2.0, 1e-12), k).w;
    CHECK(std::abs(on - above) < 1e-9);
  }
  // -0.0 imaginary part is treated as +0.
  CHECK(lambert_w(Complex(-2.0, -0.0), 0).w == lambert_w(Complex(-2.0, 0.0), 0).w);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(lambert_w(0.0, 1), DomainError);
  CHECK_THROWS_AS(lambert_w(1.0, 0, 0.0), DomainError);
  CHECK(lambert_w(0.0, 0).w == Complex(0.0));
}

TEST_CASE("property: defining relation and branch strip on random points") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> lr(-6.0, 6.0), ang(-pi, pi);
  std::uniform_int_distribution<int> kd(-6, 6);
  for (int trial = 0; trial < 2000; ++trial) {
    const Complex x = std::polar(std::exp(lr(rng)), ang(rng));
    const int k = kd(rng);
    const WValue r = lambert_w(x, k);
    CHECK(std::abs(r.w * std::exp(r.w) - x) <= 1e-12 * std::abs(x));
    CHECK(lambert_branch_of(r.w) == k);
    const auto [lo, hi] = lambert_branch_strip(k);
    CHECK(r.w.imag() > lo);
    CHECK(r.w.imag() < hi);
  }
}

TEST_CASE("property: conjugate symmetry off the cuts") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> re(-5.0, 5.0), im(0.01, 5.0);
  for (int trial = 0; trial < 300; ++trial) {
    const Complex x(re(rng), im(rng));
    for (const int k : {-2, -1, 0, 1, 2}) {
      const Complex a = lambert_w(std::conj(x), -k).w;
      const Complex b = std::conj(lambert_w(x, k).w);
      CHECK(std::abs(a - b) <= 1e-12 * (1.0 + std::abs(b)));
    }
  }
}
