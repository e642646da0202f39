#include "stirnum/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace stirnum {

namespace {

mpq_class canonical(const Int& n, const Int& d) {
  if (sgn(d) == 0) throw std::domain_error("Rational: zero denominator");
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace

Rational::Rational(long n, long d) : v_(canonical(Int(n), Int(d))) {}

Rational::Rational(const Int& n, const Int& d) : v_(canonical(n, d)) {}

Rational Rational::from_string(std::string_view s) {
  // strict grammar: -?digits(/-?digits)?  (GMP's own parser skips
  // whitespace, so validate first)
  const auto is_int = [](std::string_view t) {
    if (!t.empty() && t.front() == '-') t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  const auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  if (!is_int(num)) throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'");
  if (slash == std::string_view::npos) return Rational(Int(std::string(num)));
  std::string_view den = s.substr(slash + 1);
  if (!is_int(den)) throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'");
  return Rational(Int(std::string(num)), Int(std::string(den)));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

std::string Rational::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& r, unsigned long e) {
  return Rational(int_pow(r.num(), e), int_pow(r.den(), e));
}

}  // namespace stirnum
