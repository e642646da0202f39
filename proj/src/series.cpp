#include "stirnum/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace stirnum {

TruncatedEGF TruncatedEGF::one(std::size_t order) { return monomial(0, order); }

TruncatedEGF TruncatedEGF::monomial(std::size_t n, std::size_t order, const Rational& c) {
  TruncatedEGF s(order);
  if (n < order) s.coeffs_[n] = c;
  return s;
}

TruncatedEGF TruncatedEGF::exp(const Rational& a, std::size_t order) {
  if (order < 1) throw std::invalid_argument("TruncatedEGF::exp: order must be >= 1");
  TruncatedEGF s(order);
  s.coeffs_[0] = Rational(1);
  for (std::size_t n = 1; n < order; ++n)
    s.coeffs_[n] = s.coeffs_[n - 1] * a / Rational(static_cast<long>(n));
  return s;
}

TruncatedEGF TruncatedEGF::log1p(std::size_t order) {
  if (order < 1) throw std::invalid_argument("TruncatedEGF::log1p: order must be >= 1");
  TruncatedEGF s(order);
  for (std::size_t n = 1; n < order; ++n)
    s.coeffs_[n] = Rational(n % 2 == 1 ? 1 : -1, static_cast<long>(n));
  return s;
}

TruncatedEGF TruncatedEGF::from_polynomial(const Polynomial& p, std::size_t order) {
  TruncatedEGF s(order);
  for (std::size_t i = 0; i < order; ++i) s.coeffs_[i] = p.coeff(i);
  return s;
}

const Rational& TruncatedEGF::coeff(std::size_t i) const {
  if (i >= coeffs_.size()) throw std::out_of_range("TruncatedEGF::coeff: index beyond truncation order");
  return coeffs_[i];
}

std::size_t TruncatedEGF::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return i;
  return coeffs_.size();
}

Rational TruncatedEGF::egf_coefficient(std::size_t n) const {
  if (n >= coeffs_.size()) throw std::out_of_range("TruncatedEGF::egf_coefficient: index beyond truncation order");
  return Rational(factorial(n)) * coeffs_[n];
}

TruncatedEGF TruncatedEGF::truncated(std::size_t order) const {
  TruncatedEGF s(std::min(order, coeffs_.size()));
  std::copy_n(coeffs_.begin(), s.coeffs_.size(), s.coeffs_.begin());
  return s;
}

TruncatedEGF TruncatedEGF::operator-() const {
  TruncatedEGF s(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) s.coeffs_[i] = -coeffs_[i];
  return s;
}

TruncatedEGF operator+(const TruncatedEGF& a, const TruncatedEGF& b) {
  TruncatedEGF s(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i < s.order(); ++i) s.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
  return s;
}

TruncatedEGF operator-(const TruncatedEGF& a, const TruncatedEGF& b) {
  TruncatedEGF s(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i < s.order(); ++i) s.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
  return s;
}

TruncatedEGF operator*(const TruncatedEGF& a, const TruncatedEGF& b) {
  TruncatedEGF s(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i < s.order(); ++i)
    for (std::size_t j = 0; j <= i; ++j) s.coeffs_[i] += a.coeffs_[j] * b.coeffs_[i - j];
  return s;
}

TruncatedEGF operator*(const Rational& c, const TruncatedEGF& s) {
  TruncatedEGF r(s.order());
  for (std::size_t i = 0; i < s.order(); ++i) r.coeffs_[i] = c * s.coeffs_[i];
  return r;
}

TruncatedEGF div(const TruncatedEGF& a, const TruncatedEGF& b) {
  const std::size_t v = b.valuation();
  if (v == b.order()) throw std::invalid_argument("div: divisor is zero to its stored order");
  if (a.valuation() < v) throw std::invalid_argument("div: numerator valuation below divisor valuation");
  const std::size_t n = std::min(a.order(), b.order()) - v;
  // shift both down by v, then long division by the unit series b'
  std::vector<Rational> q(n);
  const Rational b0 = b.coeff(v);
  for (std::size_t i = 0; i < n; ++i) {
    Rational acc = a.coeff(i + v);
    for (std::size_t j = 0; j < i; ++j) acc -= q[j] * b.coeff(v + i - j);
    q[i] = acc / b0;
  }
  return TruncatedEGF(std::move(q));
}

TruncatedEGF compose(const TruncatedEGF& outer, const TruncatedEGF& inner) {
  const std::size_t n = std::min(outer.order(), inner.order());
  if (inner.order() > 0 && !inner.coeff(0).is_zero())
    throw std::invalid_argument("compose: inner series must have zero constant term");
  TruncatedEGF acc(n);
  const TruncatedEGF inner_n = inner.truncated(n);
  for (std::size_t i = outer.order(); i-- > 0;)
    acc = acc * inner_n + TruncatedEGF::monomial(0, n, outer.coeff(i));
  return acc;
}

TruncatedEGF polylog(long q, const TruncatedEGF& inner) {
  if (q < 1) throw std::invalid_argument("polylog: order q must be >= 1");
  if (inner.order() > 0 && !inner.coeff(0).is_zero())
    throw std::invalid_argument("polylog: inner series must have zero constant term");
  const std::size_t n = inner.order();
  TruncatedEGF acc(n);
  TruncatedEGF power = inner;
  for (std::size_t m = 1; m < n; ++m) {
    acc = acc + Rational(Int(1), int_pow(Int(static_cast<long>(m)), static_cast<unsigned long>(q))) * power;
    if (m + 1 < n) power = power * inner;
  }
  return acc;
}

}  // namespace stirnum
