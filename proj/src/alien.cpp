#include "resurgence/alien.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace resurgence {

namespace {

using std::numbers::pi;

long singular_index(Complex omega) {
  const double m = omega.imag() / (2.0 * pi);
  const long k = std::lround(m);
  if (k == 0 || std::abs(omega.real()) > 1e-9 || std::abs(m - static_cast<double>(k)) > 1e-9) {
    throw DomainError("omega must lie in 2 pi i Z minus the origin");
  }
  return k;
}

void require_sheeted(const BorelFunction& f) {
  if (f.kind == BorelKind::minor_mu) {
    throw DomainError("minor_mu has simple poles, not square-root singularities");
  }
}

double factorial(int n) { return std::tgamma(n + 1.0); }

// Variation of the germ at omega along one detour word.
Complex word_variation(const BorelFunction& f, const BranchPath& path, Complex omega, double rho, double alpha) {
  return continue_around(f, path, omega, rho, alpha) - continue_around(f, path, omega, rho, alpha - 2.0 * pi);
}

}  // namespace

SingularityData alien_plus(const BorelFunction& f, Complex omega) {
  require_sheeted(f);
  const long m = singular_index(omega);
  const long dir = m > 0 ? 1 : -1;
  BranchPath path;
  path.base_theta = dir * pi / 2.0;
  for (long j = 1; j < std::labs(m); ++j) path.detours.push_back({dir * j, DetourSide::right});
  SingularityData s;
  s.location = Complex(0.0, 2.0 * pi * static_cast<double>(m));
  s.base_theta = path.base_theta;
  s.sampler = [f, path, loc = s.location](double rho, double alpha) {
    return word_variation(f, path, loc, rho, alpha);
  };
  return s;
}

SingularityData alien(const BorelFunction& f, Complex omega) {
  require_sheeted(f);
  const long m = singular_index(omega);
  const long dir = m > 0 ? 1 : -1;
  const int r = static_cast<int>(std::labs(m));
  std::vector<std::pair<double, BranchPath>> words;
  for (unsigned bits = 0; bits < (1u << (r - 1)); ++bits) {
    BranchPath path;
    path.base_theta = dir * pi / 2.0;
    int p = 0;
    for (int j = 1; j < r; ++j) {
      const bool right = ((bits >> (j - 1)) & 1u) != 0;
      p += right ? 1 : 0;
      path.detours.push_back({dir * j, right ? DetourSide::right : DetourSide::left});
    }
    const int q = (r - 1) - p;
    words.emplace_back(factorial(p) * factorial(q) / factorial(r), path);
  }
  SingularityData s;
  s.location = Complex(0.0, 2.0 * pi * static_cast<double>(m));
  s.base_theta = dir * pi / 2.0;
  s.sampler = [f, words, loc = s.location](double rho, double alpha) {
    Complex total = 0.0;
    for (const auto& [w, path] : words) total += w * word_variation(f, path, loc, rho, alpha);
    return total;
  };
  return s;
}

GermComparison compare_germ(const SingularityData& s, const BorelFunction& base, const std::vector<double>& radii,
                            const std::vector<double>& offsets) {
  GermComparison out;
  Complex sum = 0.0;
  for (double rho : radii) {
    for (double da : offsets) {
      const double alpha = s.base_theta - pi + da;
      GermComparison::Sample smp{rho, alpha, s.sampler(rho, alpha), evaluate(base, {rho, alpha}), 0.0};
      smp.ratio = smp.germ / smp.reference;
      sum += smp.ratio;
      out.relative_magnitude = std::max(out.relative_magnitude, std::abs(smp.germ) / std::abs(smp.reference));
      out.samples.push_back(smp);
    }
  }
  if (out.samples.empty()) throw DomainError("compare_germ: no sample points");
  out.mean_ratio = sum / static_cast<double>(out.samples.size());
  for (const auto& smp : out.samples) out.ratio_spread = std::max(out.ratio_spread, std::abs(smp.ratio - out.mean_ratio));
  return out;
}

}  // namespace resurgence
