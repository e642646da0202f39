#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "stirnum/bernoulli.hpp"
#include "stirnum/bigint.hpp"
#include "stirnum/polynomial.hpp"

using stirnum::Int;
using stirnum::Polynomial;
using stirnum::Rational;

namespace {

// Independent double-sum route (the alternating binomial form with 0^0 = 1),
// kept test-only: B_n = sum_k 1/(k+1) sum_j C(k,j)(-1)^j j^n.
Rational bernoulli_double_sum(long n) {
  Rational sum;
  for (long k = 0; k <= n; ++k) {
    Rational inner;
    for (long j = 0; j <= k; ++j) {
      const Rational term(stirnum::binomial(k, j) *
                          stirnum::int_pow(Int(j), static_cast<unsigned long>(n)));
      if (j % 2 == 0)
        inner += term;
      else
        inner -= term;
    }
    sum += inner / Rational(k + 1);
  }
  return sum;
}

}  // namespace

TEST_CASE("anchor values") {
  const Rational expected[] = {Rational(1),       Rational(-1, 2), Rational(1, 6),
                               Rational(0),       Rational(-1, 30)};
  for (long n = 0; n <= 4; ++n) CHECK(stirnum::bernoulli_number(n) == expected[n]);
  CHECK(stirnum::bernoulli_number(12) == Rational(-691, 2730));
  for (long n = 3; n <= 19; n += 2) CHECK(stirnum::bernoulli_number(n).is_zero());
  CHECK_THROWS_AS(stirnum::bernoulli_number(-1), std::invalid_argument);
}

TEST_CASE("Stirling sum equals the double-sum alternate") {
  for (long n = 0; n <= 25; ++n) CHECK(stirnum::bernoulli_number(n) == bernoulli_double_sum(n));
}

TEST_CASE("polynomials: shape and anchor coefficients") {
  const Polynomial b1 = stirnum::bernoulli_polynomial(1);
  CHECK(b1 == Polynomial(std::vector<Rational>{Rational(-1, 2), Rational(1)}));
  const Polynomial b2 = stirnum::bernoulli_polynomial(2);
  CHECK(b2 == Polynomial(std::vector<Rational>{Rational(1, 6), Rational(-1), Rational(1)}));
  const Polynomial b3 = stirnum::bernoulli_polynomial(3);
  CHECK(b3 == Polynomial(std::vector<Rational>{Rational(0), Rational(1, 2), Rational(-3, 2),
                                               Rational(1)}));
  for (long n = 0; n <= 20; ++n) {
    const Polynomial p = stirnum::bernoulli_polynomial(n);
    CHECK(p.degree() == n);
    CHECK(p.coeff(static_cast<std::size_t>(n)) == Rational(1));  // monic
    CHECK(p.coeff(0) == stirnum::bernoulli_number(n));            // constant term B_n
  }
}

TEST_CASE("Stirling-form polynomial equals the definitional route") {
  for (long n = 0; n <= 20; ++n)
    CHECK(stirnum::bernoulli_polynomial_stirling(n) == stirnum::bernoulli_polynomial(n));
}

TEST_CASE("point-evaluation routes agree") {
  CHECK(stirnum::bernoulli_nielsen(2, Rational(1, 2)) == Rational(-1, 12));
  CHECK(stirnum::bernoulli_todorov(2, Rational()) == Rational(1, 6));
  CHECK(stirnum::bernoulli_todorov(3, Rational(1)) == Rational(0));
  CHECK(stirnum::bernoulli_todorov(3, Rational(2)) == Rational(3));
  const std::vector<Rational> xs = {Rational(0), Rational(1), Rational(-1), Rational(2),
                                    Rational(-2), Rational(1, 2), Rational(-3, 7)};
  for (long n = 0; n <= 15; ++n) {
    const Polynomial p = stirnum::bernoulli_polynomial(n);
    for (const Rational& x : xs) {
      const Rational direct = p.eval(x);
      CHECK(stirnum::bernoulli_nielsen(n, x) == direct);
      CHECK(stirnum::bernoulli_todorov(n, x) == direct);
    }
  }
  CHECK(stirnum::bernoulli_nielsen(5, Rational()) == stirnum::bernoulli_number(5));
}

TEST_CASE("forward difference of B_n is the derivative of the power") {
  // Delta B_n(x) = n x^{n-1}
  for (long n = 1; n <= 30; ++n)
    CHECK(finite_difference(stirnum::bernoulli_polynomial(n)) ==
          Rational(n) * Polynomial::monomial(static_cast<std::size_t>(n - 1)));
  CHECK(finite_difference(stirnum::bernoulli_polynomial(0)).is_zero());
}

TEST_CASE("r-Stirling route equals polynomial evaluation at integers") {
  CHECK(stirnum::bernoulli_at_integer_rstirling(2, 1) == Rational(1, 6));
  CHECK(stirnum::bernoulli_at_integer_rstirling(3, 2) == Rational(3));
  for (long n = 0; n <= 15; ++n) {
    CHECK(stirnum::bernoulli_at_integer_rstirling(n, 0) == stirnum::bernoulli_number(n));
    const Polynomial p = stirnum::bernoulli_polynomial(n);
    for (long r = 0; r <= 4; ++r)
      CHECK(stirnum::bernoulli_at_integer_rstirling(n, r) == p.eval(Rational(r)));
  }
  CHECK_THROWS_AS(stirnum::bernoulli_at_integer_rstirling(3, -1), std::invalid_argument);
}

TEST_CASE("generating-function oracle") {
  for (long n = 0; n <= 20; ++n)
    CHECK(stirnum::bernoulli_gf_oracle(n, Rational(), static_cast<std::size_t>(n) + 2) ==
          stirnum::bernoulli_number(n));
  const stirnum::TruncatedEGF s = stirnum::bernoulli_gf_series(Rational(1, 2), 18);
  for (long n = 0; n <= 16; ++n)
    CHECK(s.egf_coefficient(static_cast<std::size_t>(n)) ==
          stirnum::bernoulli_nielsen(n, Rational(1, 2)));
}
