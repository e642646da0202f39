#pragma once

#include <cstddef>
#include <vector>

#include "stirnum/polynomial.hpp"
#include "stirnum/rational.hpp"

namespace stirnum {

// Formal power series in t, truncated to a fixed number of exact rational
// coefficients. `order` is the number of retained coefficients (powers
// 0..order-1); every arithmetic result carries the minimum of the operand
// orders. Coefficients are stored as ordinary power-series coefficients;
// egf_coefficient(n) rescales by n! for reading a series used as an
// exponential generating function.
class TruncatedEGF {
 public:
  /// Zero series of the given order.
  explicit TruncatedEGF(std::size_t order) : coeffs_(order) {}
  explicit TruncatedEGF(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

  static TruncatedEGF one(std::size_t order);
  /// c * t^n, truncated.
  static TruncatedEGF monomial(std::size_t n, std::size_t order, const Rational& c = Rational(1));
  /// exp(a*t): coefficients a^n / n!. Requires order >= 1.
  static TruncatedEGF exp(const Rational& a, std::size_t order);
  /// ln(1+t): 0, 1, -1/2, 1/3, ... Requires order >= 1.
  static TruncatedEGF log1p(std::size_t order);
  /// Truncated copy of a polynomial's coefficients.
  static TruncatedEGF from_polynomial(const Polynomial& p, std::size_t order);

  std::size_t order() const { return coeffs_.size(); }
  /// Ordinary coefficient of t^i; throws std::out_of_range for i >= order.
  const Rational& coeff(std::size_t i) const;
  /// Index of the first nonzero coefficient; order() if zero throughout.
  std::size_t valuation() const;
  /// a_n in sum a_n t^n / n!, i.e. n! * coeff(n). Throws std::out_of_range
  /// when n >= order (truncation exceeded).
  Rational egf_coefficient(std::size_t n) const;

  /// Copy truncated to a smaller order.
  TruncatedEGF truncated(std::size_t order) const;

  TruncatedEGF operator-() const;
  friend TruncatedEGF operator+(const TruncatedEGF& a, const TruncatedEGF& b);
  friend TruncatedEGF operator-(const TruncatedEGF& a, const TruncatedEGF& b);
  /// Cauchy product to the common order.
  friend TruncatedEGF operator*(const TruncatedEGF& a, const TruncatedEGF& b);
  friend TruncatedEGF operator*(const Rational& c, const TruncatedEGF& s);

  friend bool operator==(const TruncatedEGF& a, const TruncatedEGF& b) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Truncated quotient a/b. Both operands are shifted down by val(b), then a
/// is divided by the resulting unit series; the result order is
/// min(order a, order b) - val(b). Throws std::invalid_argument when b is
/// identically zero to its stored order or val(a) < val(b) (the quotient is
/// not a power series at this truncation).
TruncatedEGF div(const TruncatedEGF& a, const TruncatedEGF& b);

/// Substitution outer(inner(t)) by Horner on truncated series; result order
/// is min of the operand orders. Requires inner to have zero constant term
/// (throws std::invalid_argument otherwise).
TruncatedEGF compose(const TruncatedEGF& outer, const TruncatedEGF& inner);

/// Li_q applied to a series with zero constant term:
/// sum_{m=1}^{N-1} inner^m / m^q truncated to N = inner.order(). Terms with
/// m >= N cannot contribute since val(inner^m) >= m. Requires q >= 1.
TruncatedEGF polylog(long q, const TruncatedEGF& inner);

}  // namespace stirnum
