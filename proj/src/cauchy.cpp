#include "stirnum/cauchy.hpp"

#include <stdexcept>

#include "stirnum/bigint.hpp"
#include "stirnum/polynomial.hpp"
#include "stirnum/stirling.hpp"

namespace stirnum {

namespace {

void check_n(long n, const char* who) {
  if (n < 0) throw std::invalid_argument(std::string(who) + ": n must be non-negative");
}

}  // namespace

Rational cauchy_number(long n) {
  check_n(n, "cauchy_number");
  Rational sum;
  for (long k = 0; k <= n; ++k) sum += Rational(stirling1_signed(n, k), Int(k + 1));
  return sum;
}

Rational cauchy_number_integral(long n) {
  check_n(n, "cauchy_number_integral");
  const Polynomial p = falling_factorial(static_cast<std::size_t>(n));
  Rational sum;
  for (std::size_t i = 0; i <= static_cast<std::size_t>(p.degree()); ++i)
    sum += p.coeff(i) / Rational(static_cast<long>(i) + 1);
  return sum;
}

TruncatedEGF cauchy_gf_series(std::size_t order) {
  const std::size_t padded = order + 1;
  return div(TruncatedEGF::monomial(1, padded), TruncatedEGF::log1p(padded));
}

Rational cauchy_gf_oracle(long n, std::size_t N) {
  check_n(n, "cauchy_gf_oracle");
  return cauchy_gf_series(N).egf_coefficient(static_cast<std::size_t>(n));
}

Rational poly_cauchy_number(long n, long q) {
  check_n(n, "poly_cauchy_number");
  if (q < 1) throw std::invalid_argument("poly_cauchy_number: q must be at least 1");
  Rational sum;
  for (long k = 0; k <= n; ++k)
    sum += Rational(stirling1_signed(n, k), int_pow(Int(k + 1), static_cast<unsigned long>(q)));
  return sum;
}

Rational cauchy_polynomial_at_integer(long n, long r) {
  check_n(n, "cauchy_polynomial_at_integer");
  if (r < 0) throw std::invalid_argument("cauchy_polynomial_at_integer: r must be non-negative");
  Rational sum;
  for (long k = 0; k <= n; ++k)
    sum += Rational(rstirling1_signed(r, n + r, k + r), Int(k + 1));
  return sum;
}

TruncatedEGF cauchy_polynomial_gf_series(long r, std::size_t order) {
  if (r < 0) throw std::invalid_argument("cauchy_polynomial_gf_series: r must be non-negative");
  const std::size_t padded = order + 1;
  const Polynomial one_plus_t = Polynomial::constant(Rational(1)) + Polynomial::monomial(1, Rational(1));
  const TruncatedEGF denom =
      TruncatedEGF::from_polynomial(pow(one_plus_t, static_cast<unsigned long>(r)), padded) *
      TruncatedEGF::log1p(padded);
  return div(TruncatedEGF::monomial(1, padded), denom);
}

Rational cauchy_polynomial_gf_oracle(long n, long r, std::size_t N) {
  check_n(n, "cauchy_polynomial_gf_oracle");
  return cauchy_polynomial_gf_series(r, N).egf_coefficient(static_cast<std::size_t>(n));
}

}  // namespace stirnum
