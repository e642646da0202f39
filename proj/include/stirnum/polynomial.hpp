#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "stirnum/rational.hpp"

namespace stirnum {

// Dense univariate polynomial with exact rational coefficients. Canonical
// form: no trailing zero coefficients stored (the zero polynomial is the
// empty list), so operator== is plain coefficient-list comparison.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  /// c * x^n
  static Polynomial monomial(std::size_t n, const Rational& c = Rational(1));

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the polynomial; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of x^i (0 beyond the stored degree).
  Rational coeff(std::size_t i) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// Exact value at x, by Horner's rule.
  Rational eval(const Rational& x) const;

  /// p(x + a).
  Polynomial translated(const Rational& a) const;
  /// p(-x).
  Polynomial reflected() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// The k-fold forward difference (Delta p)(x) = p(x+1) - p(x); k = 0 is the
/// identity. Drops the degree by one per application until the polynomial
/// vanishes.
Polynomial finite_difference(const Polynomial& p, unsigned long k = 1);

/// x(x-1)...(x-n+1); the empty product (n = 0) is the constant 1. Its
/// coefficients are the signed Stirling numbers of the first kind.
Polynomial falling_factorial(unsigned long n);

/// p^e by repeated multiplication; p^0 = 1.
Polynomial pow(const Polynomial& p, unsigned long e);

}  // namespace stirnum
