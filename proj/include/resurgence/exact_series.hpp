#pragma once

// Exact rational arithmetic for the formal series attached to the Gamma
// normalization lambda(z) = Gamma(z) / (sqrt(2 pi) z^(z-1/2) e^(-z)):
// Bernoulli numbers, the Stirling series, the coefficient sequence a_k of the
// Puiseux expansions of q_+/q_-, and lambda~ = exp(mu~).
//
// No floating point enters this module except in the explicit `evaluate`
// helpers used to compare against numerical evaluators.

#include <complex>
#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "resurgence/errors.hpp"

namespace resurgence {

/// Arbitrary-precision rational, always reduced with positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

enum class Sign { plus, minus };

/// Truncated power series sum_{n=0}^{N} c_n t^n in a formal variable t.
///
/// The truncation order N is explicit state: coefficients above N are
/// unknown, not zero. Binary operations truncate to the smaller order.
class PowerSeries {
 public:
  PowerSeries() = default;
  /// `coeffs` shorter than `truncation_order + 1` is padded with exact zeros;
  /// longer input is cut.
  PowerSeries(std::vector<Rational> coeffs, int truncation_order);

  static PowerSeries zero(int truncation_order);
  static PowerSeries one(int truncation_order);

  int truncation_order() const { return order_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Throws DomainError above the truncation order.
  const Rational& operator[](int n) const;

  PowerSeries truncated(int order) const;

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const Rational& s, const PowerSeries& a);
  friend bool operator==(const PowerSeries& a, const PowerSeries& b);

  /// Coefficients evaluated in double precision at t (Horner).
  std::complex<double> evaluate(std::complex<double> t) const;

 private:
  std::vector<Rational> coeffs_;
  int order_ = 0;
};

/// exp(p) for p with zero constant term. Throws DomainError otherwise.
PowerSeries exp(const PowerSeries& p);
/// log(1 + p) for p with zero constant term. Throws DomainError otherwise.
PowerSeries log1p(const PowerSeries& p);

/// Series sum_n c_n z^(-n-shift) in powers of 1/z. `shift` is a half-integer.
struct RationalSeries {
  PowerSeries body;
  Rational shift = 0;

  int truncation_order() const { return body.truncation_order(); }
  /// Coefficient of z^(-n-shift).
  const Rational& coefficient(int n) const { return body[n]; }
};

/// Convergent germ prefactor * sum_k c_k (2 xi)^(k/2) near xi = 0.
///
/// The prefactor is the unit i^quarter_turns. Evaluation needs an explicit
/// choice of the square root u = (2 xi)^(1/2), passed by the caller.
struct PuiseuxSeries {
  PowerSeries body;  // in u = (2 xi)^(1/2)
  int quarter_turns = 0;

  int truncation_order() const { return body.truncation_order(); }
  std::complex<double> prefactor() const;
  std::complex<double> evaluate_at_root(std::complex<double> u) const;
};

/// Bernoulli number B_n, convention B_1 = -1/2.
Rational bernoulli(int n);
/// B_0 .. B_nmax.
std::vector<Rational> bernoulli_numbers(int nmax);

/// (2m+1)!! = 1*3*...*(2m+1); returns 1 for m < 0.
BigInt double_factorial_odd(int m);

/// mu~(z) = sum_{n>=0} B_{2n+2}/((2n+2)(2n+1)) z^(-2n-1), through z^(-order).
RationalSeries stirling_series(int order);

/// a_1 .. a_kmax (index 0 holds a_1).
std::vector<Rational> a_coefficients(int kmax);

/// Formal exponential of a series with zero constant term and zero shift.
RationalSeries series_exp(const RationalSeries& s);

/// lambda~(z) = sum_{n>=0} (2n+1)!! a_{2n+1} z^(-n), through z^(-order).
RationalSeries lambda_tilde(int order);

/// q_+(xi) = 1 + sum a_k (2xi)^(k/2), q_-(xi) = 1 + sum (-1)^k a_k (2xi)^(k/2).
PuiseuxSeries puiseux_q(Sign sign, int kmax);

}  // namespace resurgence
