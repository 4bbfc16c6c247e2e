#pragma once

// Complex Lambert W on every integer branch.
//
// Branch cuts follow Corless, Gonnet, Hare, Jeffrey and Knuth: W_0 is cut
// along (-inf, -1/e], every W_k with k != 0 along (-inf, 0]. Values on a cut
// are the limits from the upper half plane (counter-clockwise continuity).
// W_0 and W_{-1} meet at -1/e from above the real axis, W_0 and W_1 from
// below.
//
// Test vectors (checked in tests/unit/test_lambert_w.cpp):
//   W_0(e) = 1,  W_0(-1/e) = W_{-1}(-1/e) = -1,
//   W_{-1}(-0.1) = -3.577152063957297,  W_0(-0.1) = -0.11183255915896297,
//   W_1(-0.1 - 0i) lies in the strip 0 < Im w < 3 pi.

#include <utility>

#include "resurgence/errors.hpp"
#include "resurgence/exact_series.hpp"

namespace resurgence {

inline constexpr double kDefaultWTolerance = 1e-13;

struct WValue {
  Complex w;
  int branch = 0;
  /// |w e^w - x| / |x| after the last iteration (|w| when x = 0).
  double residual = 0.0;
};

/// W_k(x) with relative residual at most `tol`.
///
/// Throws DomainError for x = 0 with k != 0 or tol <= 0, ConvergenceError
/// when no seed converges onto branch k.
WValue lambert_w(Complex x, int k, double tol = kDefaultWTolerance);

/// W near the branch point -1/e, seeded by the Puiseux series in
/// p = sqrt(2 (e x + 1)). `sheet == plus` selects the W_0 side,
/// `minus` the W_{-1} side on the real slice (W_1 side below the real axis).
WValue lambert_w_near_branch_point(Complex x, Sign sheet, double tol = kDefaultWTolerance);

/// Index k of the branch whose range contains w (upper-limit convention on
/// the boundary curves that image the cuts).
int lambert_branch_of(Complex w);

/// Open horizontal strip (lo, hi) that contains Im W_k(x) for every x.
std::pair<double, double> lambert_branch_strip(int k);

}  // namespace resurgence
