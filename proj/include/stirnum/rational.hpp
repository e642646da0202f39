#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "stirnum/bigint.hpp"

namespace stirnum {

// Exact rational scalar. Invariants, enforced after every operation:
//   * gcd(|numerator|, denominator) = 1
//   * denominator > 0 (zero is 0/1)
// Immutable value semantics; safe to share between threads.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}          // NOLINT: implicit by design
  Rational(const Int& n) : v_(n) {}    // NOLINT: implicit by design
  Rational(long n, long d);
  Rational(const Int& n, const Int& d);

  /// Parses "p" or "p/q" (q != 0, any sign); the result is normalized.
  static Rational from_string(std::string_view s);

  Int num() const { return v_.get_num(); }
  Int den() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);
  Rational operator-() const;

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
    return c <=> 0;
  }

  /// "p" when the value is an integer, "p/q" otherwise; round-trips
  /// through from_string to an identical value.
  std::string str() const;

 private:
  mpq_class v_;  // kept canonical
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// r^e, exact. 0^0 = 1.
Rational pow(const Rational& r, unsigned long e);

}  // namespace stirnum
