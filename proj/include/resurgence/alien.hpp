#pragma once

// Alien operators at omega in 2 pi i Z*, realized on germ samples.
//
// The singularity of a continued minor at omega is represented by the
// variation of the germ xi' -> f(omega + xi'), with xi' = rho e^{i alpha} on
// the surface around omega and the approach convention arg xi' = arg omega - pi.
// Two square-root singularities are compared through the ratio of their
// variations at matched sample points.

#include <functional>
#include <vector>

#include "resurgence/borel_plane.hpp"

namespace resurgence {

struct SingularityData {
  enum class Type { square_root };

  Complex location;
  Type type_tag = Type::square_root;
  /// Argument of omega; xi' = rho e^{i (base_theta - pi)} is the approach point.
  double base_theta = 0.0;
  /// Variation of the germ at omega + rho e^{i alpha} (alpha a surface argument).
  std::function<Complex(double rho, double alpha)> sampler;
};

/// Singularity at omega of the continuation that passes every earlier
/// singular point of the ray on the right.
SingularityData alien_plus(const BorelFunction& f, Complex omega);

/// Weighted sum over all detour words, weight p! q! / r! for a word with
/// p right and q left detours among the r - 1 earlier singular points.
SingularityData alien(const BorelFunction& f, Complex omega);

struct GermComparison {
  struct Sample {
    double rho, alpha;
    Complex germ, reference, ratio;
  };
  std::vector<Sample> samples;
  Complex mean_ratio;
  /// max |ratio_j - mean_ratio|.
  double ratio_spread = 0.0;
  /// max |germ_j| / |reference_j|.
  double relative_magnitude = 0.0;
};

inline const std::vector<double> kGermRadii = {1e-2, 1e-3, 1e-4};
/// Offsets added to the approach argument arg omega - pi.
inline const std::vector<double> kGermAngleOffsets = {0.0, -0.6, 0.6};

/// Compares the singularity with the germ of `base` at the origin:
/// reference_j = base(rho_j e^{i alpha_j}) on the surface.
GermComparison compare_germ(const SingularityData& s, const BorelFunction& base,
                            const std::vector<double>& radii = kGermRadii,
                            const std::vector<double>& offsets = kGermAngleOffsets);

}  // namespace resurgence
