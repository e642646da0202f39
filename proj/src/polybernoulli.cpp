#include "stirnum/polybernoulli.hpp"

#include <stdexcept>

#include "stirnum/bigint.hpp"
#include "stirnum/stirling.hpp"

namespace stirnum {

namespace {

void check_args(long n, long q, const char* who) {
  if (n < 0) throw std::invalid_argument(std::string(who) + ": n must be non-negative");
  if (q < 1) throw std::invalid_argument(std::string(who) + ": q must be at least 1");
}

// k!(-1)^k/(k+1)^q
Rational poly_weight(long k, long q) {
  Rational w(factorial(static_cast<unsigned long>(k)),
             int_pow(Int(k + 1), static_cast<unsigned long>(q)));
  return k % 2 == 0 ? w : -w;
}

}  // namespace

Rational polybernoulli_number(long n, long q) {
  check_args(n, q, "polybernoulli_number");
  Rational sum;
  for (long k = 0; k <= n; ++k) sum += poly_weight(k, q) * Rational(stirling2(n, k));
  return n % 2 == 0 ? sum : -sum;
}

Polynomial polybernoulli_polynomial(long n, long q) {
  check_args(n, q, "polybernoulli_polynomial");
  Polynomial result;
  for (long k = 0; k <= n; ++k) {
    Polynomial inner;
    for (long p = 0; p <= n; ++p) {
      Rational c(binomial(n, p) * stirling2(p, k));
      if (p % 2 != 0) c = -c;
      inner += Polynomial::monomial(static_cast<std::size_t>(n - p), c);
    }
    result += poly_weight(k, q) * inner;
  }
  return result;
}

Rational polybernoulli_bayad(long n, long q, const Rational& x) {
  check_args(n, q, "polybernoulli_bayad");
  Rational sum;
  for (long k = 0; k <= n; ++k) {
    Rational inner;
    for (long j = 0; j <= k; ++j) {
      const Rational term = Rational(binomial(k, j)) * pow(x - Rational(j), static_cast<unsigned long>(n));
      if (j % 2 == 0)
        inner += term;
      else
        inner -= term;
    }
    sum += inner / Rational(int_pow(Int(k + 1), static_cast<unsigned long>(q)));
  }
  return sum;
}

Rational polybernoulli_at_negative_integer(long n, long q, long r) {
  check_args(n, q, "polybernoulli_at_negative_integer");
  if (r < 0)
    throw std::invalid_argument("polybernoulli_at_negative_integer: r must be non-negative");
  Rational direct, braced;
  for (long k = 0; k <= n; ++k) {
    const Rational w = poly_weight(k, q);
    direct += w * Rational(rstirling2(r, n + r, k + r));
    Int inner = 0;
    for (long p = 0; p <= n; ++p)
      inner += binomial(n, p) * stirling2(p, k) * int_pow(Int(r), static_cast<unsigned long>(n - p));
    braced += w * Rational(inner);
  }
  if (n % 2 != 0) {
    direct = -direct;
    braced = -braced;
  }
  if (direct != braced)
    throw std::logic_error("polybernoulli_at_negative_integer: r-Stirling and braced forms disagree");
  return direct;
}

TruncatedEGF polybernoulli_gf_series(long q, const Rational& x, std::size_t order) {
  if (q < 1) throw std::invalid_argument("polybernoulli_gf_series: q must be at least 1");
  const std::size_t padded = order + 1;
  const TruncatedEGF s = TruncatedEGF::one(padded) - TruncatedEGF::exp(Rational(-1), padded);
  const TruncatedEGF base = div(polylog(q, s), s);  // order drops by the valuation of s
  return base * TruncatedEGF::exp(x, order);
}

Rational polybernoulli_gf_oracle(long n, long q, const Rational& x, std::size_t N) {
  if (n < 0) throw std::invalid_argument("polybernoulli_gf_oracle: n must be non-negative");
  return polybernoulli_gf_series(q, x, N).egf_coefficient(static_cast<std::size_t>(n));
}

}  // namespace stirnum
