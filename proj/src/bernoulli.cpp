#include "stirnum/bernoulli.hpp"

#include <stdexcept>

#include "stirnum/bigint.hpp"
#include "stirnum/stirling.hpp"

namespace stirnum {

namespace {

void check_n(long n, const char* who) {
  if (n < 0) throw std::invalid_argument(std::string(who) + ": n must be non-negative");
}

// (-1)^k k!/(k+1), the weight shared by the Stirling-sum routes.
Rational stirling_weight(long k) {
  Rational w(factorial(static_cast<unsigned long>(k)), Int(k + 1));
  return k % 2 == 0 ? w : -w;
}

}  // namespace

Rational bernoulli_number(long n) {
  check_n(n, "bernoulli_number");
  Rational sum;
  for (long k = 0; k <= n; ++k) sum += stirling_weight(k) * Rational(stirling2(n, k));
  return sum;
}

Polynomial bernoulli_polynomial(long n) {
  check_n(n, "bernoulli_polynomial");
  Polynomial p;
  for (long q = 0; q <= n; ++q)
    p += Polynomial::monomial(static_cast<std::size_t>(n - q),
                              Rational(binomial(n, q)) * bernoulli_number(q));
  return p;
}

Polynomial bernoulli_polynomial_stirling(long n) {
  check_n(n, "bernoulli_polynomial_stirling");
  Polynomial result;
  for (long k = 0; k <= n; ++k) {
    Polynomial inner;
    for (long q = 0; q <= n; ++q)
      inner += Polynomial::monomial(static_cast<std::size_t>(n - q),
                                    Rational(binomial(n, q) * stirling2(q, k)));
    result += stirling_weight(k) * inner;
  }
  return result;
}

Rational bernoulli_nielsen(long n, const Rational& x) {
  check_n(n, "bernoulli_nielsen");
  Rational sum;
  for (long k = 0; k <= n; ++k) {
    Rational inner;
    for (long j = 0; j <= k; ++j) {
      const Rational term = Rational(binomial(k, j)) * pow(x + Rational(j), static_cast<unsigned long>(n));
      if (j % 2 == 0)
        inner += term;
      else
        inner -= term;
    }
    sum += inner / Rational(k + 1);
  }
  return sum;
}

Rational bernoulli_todorov(long n, const Rational& x) {
  check_n(n, "bernoulli_todorov");
  Rational sum;
  Polynomial diff = Polynomial::monomial(static_cast<std::size_t>(n), Rational(1));
  for (long k = 0; k <= n; ++k) {
    const Rational term = diff.eval(x) / Rational(k + 1);
    if (k % 2 == 0)
      sum += term;
    else
      sum -= term;
    diff = finite_difference(diff, 1);
  }
  return sum;
}

Rational bernoulli_at_integer_rstirling(long n, long r) {
  check_n(n, "bernoulli_at_integer_rstirling");
  if (r < 0) throw std::invalid_argument("bernoulli_at_integer_rstirling: r must be non-negative");
  Rational sum;
  for (long k = 0; k <= n; ++k)
    sum += stirling_weight(k) * Rational(rstirling2(r, n + r, k + r));
  return sum;
}

TruncatedEGF bernoulli_gf_series(const Rational& x, std::size_t order) {
  const std::size_t padded = order + 1;
  const TruncatedEGF num = TruncatedEGF::monomial(1, padded) * TruncatedEGF::exp(x, padded);
  const TruncatedEGF den = TruncatedEGF::exp(Rational(1), padded) - TruncatedEGF::one(padded);
  return div(num, den);  // den has valuation 1, so the result keeps `order`
}

Rational bernoulli_gf_oracle(long n, const Rational& x, std::size_t N) {
  check_n(n, "bernoulli_gf_oracle");
  return bernoulli_gf_series(x, N).egf_coefficient(static_cast<std::size_t>(n));
}

}  // namespace stirnum
