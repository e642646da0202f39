#include "stirnum/polynomial.hpp"

#include <algorithm>
#include <ostream>

namespace stirnum {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) {
  return Polynomial(std::vector<Rational>{c});
}

Polynomial Polynomial::monomial(std::size_t n, const Rational& c) {
  std::vector<Rational> v(n + 1);
  v[n] = c;
  return Polynomial(std::move(v));
}

Rational Polynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational();
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  std::vector<Rational> v(p.coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = c * p.coeffs_[i];
  return Polynomial(std::move(v));
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::translated(const Rational& a) const {
  // p(x+a): c'_i = sum_{j>=i} C(j,i) c_j a^{j-i}
  std::vector<Rational> c(coeffs_.size());
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    Rational apow(1);
    for (std::size_t i = j + 1; i-- > 0;) {
      c[i] += Rational(binomial(static_cast<long>(j), static_cast<long>(i))) * coeffs_[j] * apow;
      apow *= a;
    }
  }
  return Polynomial(std::move(c));
}

Polynomial Polynomial::reflected() const {
  std::vector<Rational> c(coeffs_);
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return Polynomial(std::move(c));
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  if (p.is_zero()) return os << "0";
  os << "[";
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? ", " : "") << c[i];
  return os << "]";
}

Polynomial finite_difference(const Polynomial& p, unsigned long k) {
  Polynomial cur = p;
  for (unsigned long i = 0; i < k && !cur.is_zero(); ++i) cur = cur.translated(Rational(1)) - cur;
  return cur;
}

Polynomial falling_factorial(unsigned long n) {
  Polynomial prod = Polynomial::constant(Rational(1));
  for (unsigned long i = 0; i < n; ++i)
    prod = prod * Polynomial(std::vector<Rational>{Rational(-static_cast<long>(i)), Rational(1)});
  return prod;
}

Polynomial pow(const Polynomial& p, unsigned long e) {
  Polynomial acc = Polynomial::constant(Rational(1));
  for (unsigned long i = 0; i < e; ++i) acc = acc * p;
  return acc;
}

}  // namespace stirnum
