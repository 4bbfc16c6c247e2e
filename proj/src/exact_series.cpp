#include "resurgence/exact_series.hpp"

#include <algorithm>
#include <string>

namespace resurgence {

namespace {

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace

PowerSeries::PowerSeries(std::vector<Rational> coeffs, int truncation_order)
    : coeffs_(std::move(coeffs)), order_(truncation_order) {
  if (truncation_order < 0) throw DomainError("PowerSeries: negative truncation order");
  coeffs_.resize(static_cast<std::size_t>(truncation_order) + 1);
}

PowerSeries PowerSeries::zero(int truncation_order) { return PowerSeries({}, truncation_order); }

PowerSeries PowerSeries::one(int truncation_order) {
  return PowerSeries({Rational(1)}, truncation_order);
}

const Rational& PowerSeries::operator[](int n) const {
  if (n < 0 || n > order_) {
    throw DomainError("PowerSeries: coefficient " + std::to_string(n) +
                      " beyond truncation order " + std::to_string(order_));
  }
  return coeffs_[static_cast<std::size_t>(n)];
}

PowerSeries PowerSeries::truncated(int order) const {
  return PowerSeries(coeffs_, std::min(order, order_));
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::min(a.order_, b.order_);
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[k] = a.coeffs_[k] + b.coeffs_[k];
  return PowerSeries(std::move(c), n);
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::min(a.order_, b.order_);
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[k] = a.coeffs_[k] - b.coeffs_[k];
  return PowerSeries(std::move(c), n);
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::min(a.order_, b.order_);
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return PowerSeries(std::move(c), n);
}

PowerSeries operator*(const Rational& s, const PowerSeries& a) {
  std::vector<Rational> c = a.coeffs_;
  for (auto& x : c) x *= s;
  return PowerSeries(std::move(c), a.order_);
}

bool operator==(const PowerSeries& a, const PowerSeries& b) {
  return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

std::complex<double> PowerSeries::evaluate(std::complex<double> t) const {
  std::complex<double> acc = 0.0;
  for (int k = order_; k >= 0; --k) acc = acc * t + to_double(coeffs_[k]);
  return acc;
}

// E = exp(p) satisfies E' = p' E, i.e. n e_n = sum_{k=1}^{n} k p_k e_{n-k}.
PowerSeries exp(const PowerSeries& p) {
  if (p[0] != 0) throw DomainError("exp: series has a non-zero constant term");
  const int n = p.truncation_order();
  std::vector<Rational> e(static_cast<std::size_t>(n) + 1);
  e[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rational acc = 0;
    for (int k = 1; k <= m; ++k) {
      if (p[k] == 0) continue;
      acc += Rational(k) * p[k] * e[m - k];
    }
    e[m] = acc / m;
  }
  return PowerSeries(std::move(e), n);
}

// L = log(1 + p): (1 + p) L' = p', so n l_n = n p_n - sum_{k=1}^{n-1} k l_k p_{n-k}.
PowerSeries log1p(const PowerSeries& p) {
  if (p[0] != 0) throw DomainError("log1p: series has a non-zero constant term");
  const int n = p.truncation_order();
  std::vector<Rational> l(static_cast<std::size_t>(n) + 1);
  for (int m = 1; m <= n; ++m) {
    Rational acc = Rational(m) * p[m];
    for (int k = 1; k < m; ++k) acc -= Rational(k) * l[k] * p[m - k];
    l[m] = acc / m;
  }
  return PowerSeries(std::move(l), n);
}

std::complex<double> PuiseuxSeries::prefactor() const {
  switch (((quarter_turns % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

std::complex<double> PuiseuxSeries::evaluate_at_root(std::complex<double> u) const {
  return prefactor() * body.evaluate(u);
}

// Pascal recurrence: sum_{k=0}^{n} C(n+1, k) B_k = 0 for n >= 1.
std::vector<Rational> bernoulli_numbers(int nmax) {
  if (nmax < 0) throw DomainError("bernoulli: negative index");
  std::vector<Rational> b(static_cast<std::size_t>(nmax) + 1);
  b[0] = 1;
  std::vector<BigInt> binom{1};  // row n+1 of Pascal's triangle, rebuilt per n
  for (int n = 1; n <= nmax; ++n) {
    std::vector<BigInt> row(static_cast<std::size_t>(n) + 2);
    row[0] = 1;
    for (int k = 1; k <= n + 1; ++k) row[k] = row[k - 1] * (n + 2 - k) / k;
    Rational acc = 0;
    for (int k = 0; k < n; ++k) acc += Rational(row[k]) * b[k];
    b[n] = -acc / (n + 1);
  }
  return b;
}

Rational bernoulli(int n) { return bernoulli_numbers(n).back(); }

BigInt double_factorial_odd(int m) {
  BigInt r = 1;
  for (int j = 1; j <= 2 * m + 1; j += 2) r *= j;
  return r;
}

RationalSeries stirling_series(int order) {
  if (order < 1) throw DomainError("stirling_series: order must be >= 1");
  const auto b = bernoulli_numbers(order + 1);
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  for (int n = 0; 2 * n + 1 <= order; ++n) {
    c[2 * n + 1] = b[2 * n + 2] / (Rational(2 * n + 2) * Rational(2 * n + 1));
  }
  return {PowerSeries(std::move(c), order), 0};
}

std::vector<Rational> a_coefficients(int kmax) {
  if (kmax < 1) throw DomainError("a_coefficients: kmax must be >= 1");
  // a[k] holds a_k; a[0] unused.
  std::vector<Rational> a(static_cast<std::size_t>(kmax) + 1);
  a[1] = 1;
  for (int k = 2; k <= kmax; ++k) {
    Rational acc = a[k - 1];
    for (int l = 2; l <= k - 1; ++l) acc -= Rational(l) * a[l] * a[k + 1 - l];
    a[k] = acc / (k + 1);
  }
  a.erase(a.begin());
  return a;
}

RationalSeries series_exp(const RationalSeries& s) {
  if (s.shift != 0) throw DomainError("series_exp: only integer-power series are supported");
  return {exp(s.body), 0};
}

RationalSeries lambda_tilde(int order) {
  if (order < 0) throw DomainError("lambda_tilde: negative order");
  const auto a = a_coefficients(2 * order + 1);
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) c[n] = Rational(double_factorial_odd(n)) * a[2 * n];
  return {PowerSeries(std::move(c), order), 0};
}

PuiseuxSeries puiseux_q(Sign sign, int kmax) {
  if (kmax < 0) throw DomainError("puiseux_q: negative kmax");
  std::vector<Rational> c(static_cast<std::size_t>(kmax) + 1);
  c[0] = 1;
  if (kmax >= 1) {
    const auto a = a_coefficients(kmax);
    for (int k = 1; k <= kmax; ++k) {
      c[k] = (sign == Sign::minus && k % 2 == 1) ? -a[k - 1] : a[k - 1];
    }
  }
  return {PowerSeries(std::move(c), kmax), 0};
}

}  // namespace resurgence
