#include "resurgence/reference.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace resurgence {

namespace {

using std::numbers::pi;

// Lanczos coefficients for g = 671/128, N = 14 (Numerical Recipes, 3rd ed.,
// gammln). Relative accuracy about 1e-15 for Re z > 0.
constexpr std::array<double, 14> kLanczos = {
    57.1562356658629235,     -59.5979603554754912,     14.1360979747417471,
    -0.491913816097620199,   .339946499848118887e-4,   .465236289270485756e-4,
    -.983744753048795646e-4, .158088703224912494e-3,   -.210264441724104883e-3,
    .217439618115212643e-3,  -.164318106536763890e-3,  .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5};
constexpr double kLanczosShift = 5.24218750000000000;
constexpr double kSqrt2Pi = 2.5066282746310005;

Complex lanczos_log_gamma(Complex x) {
  Complex y = x;
  const Complex tmp = x + kLanczosShift;
  const Complex head = (x + 0.5) * std::log(tmp) - tmp;
  Complex ser = 0.999999999999997092;
  for (double c : kLanczos) {
    y += 1.0;
    ser += c / y;
  }
  return head + std::log(kSqrt2Pi * ser / x);
}

bool is_pole(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

}  // namespace

Complex log_gamma_ref(Complex z) {
  if (is_pole(z)) throw DomainError("gamma_ref: pole at a non-positive integer");
  if (z.real() >= 0.5) return lanczos_log_gamma(z);
  // Gamma(z) = Gamma(z + n) / (z (z+1) ... (z+n-1)).
  const int n = static_cast<int>(std::ceil(0.5 - z.real()));
  Complex log_prod = 0.0;
  for (int j = 0; j < n; ++j) log_prod += std::log(z + static_cast<double>(j));
  return lanczos_log_gamma(z + static_cast<double>(n)) - log_prod;
}

GammaValue gamma_ref(Complex z) {
  const Complex lg = log_gamma_ref(z);
  const double eps = std::numeric_limits<double>::epsilon();
  return {std::exp(lg), 2e-15 + 4.0 * eps * std::abs(lg)};
}

Complex lambda_ref(Complex z, Complex c) {
  if (z.imag() == 0.0 && z.real() <= 0.0) throw DomainError("lambda_ref: z on (-inf, 0]");
  const Complex lz = std::log(z);
  return std::exp(log_gamma_ref(z) - (z - 0.5) * lz + z - 0.5 * std::log(2.0 * pi) - c * lz);
}

Complex nu_ref(Complex z, Complex c) {
  if (z.imag() == 0.0 && z.real() <= 0.0) throw DomainError("nu_ref: z on (-inf, 0]");
  const Complex lz = std::log(z);
  return std::exp(log_gamma_ref(z + 0.5) - z * lz + z - 0.5 * std::log(2.0 * pi) - c * lz);
}

double reflection_check(Complex z) {
  const Complex g = gamma_ref(z).value * gamma_ref(1.0 - z).value;
  return std::abs(g * std::sin(pi * z) / pi - 1.0);
}

}  // namespace resurgence
