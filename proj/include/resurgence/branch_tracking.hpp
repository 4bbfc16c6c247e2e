#pragma once

// Analytic continuation of the pair of Lambert-W sheets that build the Borel
// plane objects of lambda_{3/2} and chi.
//
// For the lambda family the W argument is y(xi) = -exp(-1 - xi); for the chi
// family y(xi) = -exp(-1 + xi). Both families carry two solutions (w_a, w_b)
// of w e^w = y, continued together along a path of the xi plane:
//
//   family   anchor direction   (w_a, w_b) at the anchor
//   lambda   arg xi = 0         (W_0, W_{-1})
//   chi      arg xi = -pi       (W_{-1}, W_0)
//
// Continuation integrates dw/dxi = s w / (1 + w) (s = -1 for lambda, +1 for
// chi) with Newton polishing on w e^w = y. Along a curve the W branch index
// of each sheet only changes where y crosses the negative real axis, i.e.
// where Im xi is a multiple of 2 pi. A LabeledCurve records the branch index
// pair on each piece between such crossings, so repeated evaluation costs
// one Lambert-W call per sheet.

#include <vector>

#include "resurgence/errors.hpp"

namespace resurgence {

/// Radius of the excluded disks around 2 pi i m, m != 0.
inline constexpr double kProximityRadius = 1e-6 * 2.0 * 3.14159265358979323846;

enum class BorelFamily { lambda, chi };

/// Point on the Riemann surface of the logarithm.
struct SurfacePoint {
  double r = 1.0;      // > 0
  double theta = 0.0;  // unbounded argument

  Complex value() const;
  static SurfacePoint from_complex(Complex z);  // principal argument
};

struct SheetPair {
  Complex a;
  Complex b;
};

struct BranchLabels {
  int a = 0;
  int b = -1;
  friend bool operator==(const BranchLabels&, const BranchLabels&) = default;
};

/// Line segment or circular arc in the xi plane, parameterized by t in [0, 1].
struct Curve {
  enum class Kind { segment, arc };
  Kind kind = Kind::segment;
  Complex from, to;           // segment
  Complex center;             // arc
  double radius = 0.0;        // arc
  double phi0 = 0.0, phi1 = 0.0;  // arc angles, unbounded

  static Curve segment(Complex a, Complex b);
  static Curve arc(Complex center, double radius, double phi0, double phi1);

  Complex at(double t) const;
  Complex derivative(double t) const;
  double length() const;
  /// Parameters in (0, 1) where Im xi(t) crosses a multiple of 2 pi.
  std::vector<double> cut_crossings() const;
};

using Path = std::vector<Curve>;

class LabeledCurve;

class BranchTracker {
 public:
  explicit BranchTracker(BorelFamily family);

  BorelFamily family() const { return family_; }
  double anchor_theta() const;
  /// Argument of the Lambert W function at xi.
  Complex y(Complex xi) const;

  /// Sheet values at the anchor point r0 e^{i anchor_theta}, 0 < r0 < 2 pi.
  SheetPair anchor_state(double r0) const;
  BranchLabels anchor_labels() const;

  /// Continue `start` along `path` by ODE integration with Newton polishing.
  SheetPair follow(const Path& path, SheetPair start) const;
  SheetPair follow(const Curve& curve, SheetPair start) const;

  /// Split `curve` at cut crossings and label each piece.
  LabeledCurve label(const Curve& curve, SheetPair start) const;

  /// Throws ProximityError within kProximityRadius of 2 pi i Z*.
  static void check_proximity(Complex xi);

 private:
  SheetPair step_along(const Curve& c, double t0, double t1, SheetPair s) const;
  BorelFamily family_;
  double sigma_;
};

/// A curve with the W branch indices of both sheets on every piece.
class LabeledCurve {
 public:
  struct Piece {
    double t0, t1;
    BranchLabels labels;
    // Side of the crossing lines at both ends (+1/-1, 0 when the piece lies
    // on the line or the end is not a crossing).
    long m0, m1;
    int side0, side1;
  };

  LabeledCurve(BorelFamily family, Curve curve, std::vector<Piece> pieces, SheetPair end);

  const Curve& curve() const { return curve_; }
  const std::vector<Piece>& pieces() const { return pieces_; }
  SheetPair end_state() const { return end_; }

  /// Sheet values at xi(t); throws ProximityError near 2 pi i Z*.
  SheetPair at(double t) const;
  BranchLabels labels_at(double t) const;

 private:
  const Piece& piece_for(double t) const;
  BorelFamily family_;
  Curve curve_;
  std::vector<Piece> pieces_;
  SheetPair end_;
};

/// Path from the family anchor to `target`: arc at radius min(r, pi) from the
/// anchor direction to target.theta, then radially out to target.r.
Path canonical_path(BorelFamily family, SurfacePoint target);
double canonical_anchor_radius(double r);

}  // namespace resurgence
