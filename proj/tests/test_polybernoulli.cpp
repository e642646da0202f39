#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "stirnum/bernoulli.hpp"
#include "stirnum/polybernoulli.hpp"
#include "stirnum/stirling.hpp"

using stirnum::Polynomial;
using stirnum::Rational;

TEST_CASE("anchor values") {
  const Rational q2[] = {Rational(1), Rational(1, 4), Rational(-1, 36), Rational(-1, 24),
                         Rational(7, 450)};
  for (long n = 0; n <= 4; ++n) CHECK(stirnum::polybernoulli_number(n, 2) == q2[n]);
  for (long q = 1; q <= 5; ++q) CHECK(stirnum::polybernoulli_number(0, q) == Rational(1));
  CHECK_THROWS_AS(stirnum::polybernoulli_number(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(stirnum::polybernoulli_number(-1, 2), std::invalid_argument);
}

TEST_CASE("q = 1 reduces to Bernoulli with alternating sign") {
  for (long n = 0; n <= 25; ++n) {
    const Rational expected = n % 2 == 0 ? stirnum::bernoulli_number(n)
                                         : -stirnum::bernoulli_number(n);
    CHECK(stirnum::polybernoulli_number(n, 1) == expected);
    // B_n^{(1)}(x) = (-1)^n B_n(-x) coefficientwise
    Polynomial reflected = stirnum::bernoulli_polynomial(n).reflected();
    if (n % 2 != 0) reflected = Rational(-1) * reflected;
    CHECK(stirnum::polybernoulli_polynomial(n, 1) == reflected);
  }
}

TEST_CASE("constant term collapses to the number") {
  for (long q = 1; q <= 5; ++q)
    for (long n = 0; n <= 30; ++n)
      CHECK(stirnum::polybernoulli_polynomial(n, q).coeff(0) ==
            stirnum::polybernoulli_number(n, q));
}

TEST_CASE("alternating binomial sum evaluation") {
  CHECK(stirnum::polybernoulli_bayad(1, 2, Rational(1, 2)) == Rational(3, 4));
  CHECK(stirnum::polybernoulli_bayad(2, 2, Rational()) == Rational(-1, 36));
  for (long q = 1; q <= 4; ++q)
    for (const Rational& x : {Rational(3), Rational(-5, 3)})
      CHECK(stirnum::polybernoulli_bayad(0, q, x) == Rational(1));
  const std::vector<Rational> xs = {Rational(0),     Rational(1),      Rational(-1),
                                    Rational(1, 2),  Rational(-1, 2),  Rational(2)};
  for (long q = 1; q <= 3; ++q)
    for (long n = 0; n <= 12; ++n) {
      const Polynomial p = stirnum::polybernoulli_polynomial(n, q);
      for (const Rational& x : xs) CHECK(stirnum::polybernoulli_bayad(n, q, x) == p.eval(x));
    }
  CHECK_THROWS_AS(stirnum::polybernoulli_bayad(2, 0, Rational(1)), std::invalid_argument);
}

TEST_CASE("values at negative integers via r-Stirling numbers") {
  CHECK(stirnum::polybernoulli_at_negative_integer(2, 2, 1) == Rational(17, 36));
  for (long q = 1; q <= 4; ++q)
    for (long n = 0; n <= 12; ++n) {
      CHECK(stirnum::polybernoulli_at_negative_integer(n, q, 0) ==
            stirnum::polybernoulli_number(n, q));
      const Polynomial p = stirnum::polybernoulli_polynomial(n, q);
      for (long r = 0; r <= 4; ++r)
        CHECK(stirnum::polybernoulli_at_negative_integer(n, q, r) == p.eval(Rational(-r)));
    }
  // q = 1 reflection chain: B_n^{(1)}(-r) = (-1)^n B_n(r)
  for (long n = 0; n <= 12; ++n)
    for (long r = 0; r <= 3; ++r) {
      Rational expected = stirnum::bernoulli_polynomial(n).eval(Rational(r));
      if (n % 2 != 0) expected = -expected;
      CHECK(stirnum::polybernoulli_at_negative_integer(n, 1, r) == expected);
    }
  CHECK_THROWS_AS(stirnum::polybernoulli_at_negative_integer(2, 2, -1), std::invalid_argument);
}

TEST_CASE("the two r-Stirling forms are cross-checked internally") {
  stirnum::reset_tables_for_testing();
  stirnum::corrupt_table_for_testing(stirnum::StirlingKind::second, 1, 3, 2, 1);
  CHECK_THROWS_AS(stirnum::polybernoulli_at_negative_integer(2, 2, 1), std::logic_error);
  stirnum::reset_tables_for_testing();
  CHECK(stirnum::polybernoulli_at_negative_integer(2, 2, 1) == Rational(17, 36));
}

TEST_CASE("generating-function oracle") {
  for (long n = 0; n <= 15; ++n) {
    const Rational b1 = stirnum::polybernoulli_gf_oracle(n, 1, Rational(), 17);
    CHECK(b1 == stirnum::polybernoulli_number(n, 1));
  }
  for (long q = 1; q <= 4; ++q) CHECK(stirnum::polybernoulli_gf_oracle(0, q, Rational(5, 7), 3) == Rational(1));
  const std::vector<Rational> xs = {Rational(0), Rational(1), Rational(-1), Rational(1, 2)};
  for (long q = 1; q <= 4; ++q)
    for (const Rational& x : xs) {
      const stirnum::TruncatedEGF s = stirnum::polybernoulli_gf_series(q, x, 12);
      for (long n = 0; n <= 10; ++n)
        CHECK(s.egf_coefficient(static_cast<std::size_t>(n)) ==
              stirnum::polybernoulli_bayad(n, q, x));
    }
  CHECK_THROWS_AS(stirnum::polybernoulli_gf_oracle(5, 2, Rational(), 4), std::out_of_range);
  CHECK_THROWS_AS(stirnum::polybernoulli_gf_series(0, Rational(), 8), std::invalid_argument);
}
