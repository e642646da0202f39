#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "stirnum/cauchy.hpp"

using stirnum::Rational;

TEST_CASE("anchor values") {
  const Rational expected[] = {Rational(1),     Rational(1, 2), Rational(-1, 6),
                               Rational(1, 4),  Rational(-19, 30), Rational(9, 4)};
  for (long n = 0; n <= 5; ++n) CHECK(stirnum::cauchy_number(n) == expected[n]);
  CHECK_THROWS_AS(stirnum::cauchy_number(-1), std::invalid_argument);
}

TEST_CASE("integral route agrees with the Stirling sum") {
  for (long n = 0; n <= 25; ++n)
    CHECK(stirnum::cauchy_number_integral(n) == stirnum::cauchy_number(n));
}

TEST_CASE("generating-function route agrees") {
  CHECK(stirnum::cauchy_gf_oracle(0, 2) == Rational(1));
  CHECK(stirnum::cauchy_gf_oracle(3, 5) == Rational(1, 4));
  const stirnum::TruncatedEGF s = stirnum::cauchy_gf_series(22);
  for (long n = 0; n <= 20; ++n)
    CHECK(s.egf_coefficient(static_cast<std::size_t>(n)) == stirnum::cauchy_number(n));
  CHECK_THROWS_AS(stirnum::cauchy_gf_oracle(5, 5), std::out_of_range);
}

TEST_CASE("poly-Cauchy numbers") {
  CHECK(stirnum::poly_cauchy_number(1, 2) == Rational(1, 4));
  CHECK(stirnum::poly_cauchy_number(2, 2) == Rational(-5, 36));
  for (long n = 0; n <= 25; ++n)
    CHECK(stirnum::poly_cauchy_number(n, 1) == stirnum::cauchy_number(n));
  CHECK_THROWS_AS(stirnum::poly_cauchy_number(2, 0), std::invalid_argument);
}

TEST_CASE("Cauchy polynomials at integer arguments") {
  CHECK(stirnum::cauchy_polynomial_at_integer(1, 1) == Rational(-1, 2));
  CHECK(stirnum::cauchy_polynomial_at_integer(2, 1) == Rational(5, 6));
  CHECK(stirnum::cauchy_polynomial_at_integer(3, 2) == Rational(-55, 4));
  for (long n = 0; n <= 20; ++n)
    CHECK(stirnum::cauchy_polynomial_at_integer(n, 0) == stirnum::cauchy_number(n));
  CHECK_THROWS_AS(stirnum::cauchy_polynomial_at_integer(2, -1), std::invalid_argument);
}

TEST_CASE("Cauchy polynomial generating function") {
  for (long n = 0; n <= 12; ++n)
    CHECK(stirnum::cauchy_polynomial_gf_oracle(n, 0, 14) == stirnum::cauchy_gf_oracle(n, 14));
  CHECK(stirnum::cauchy_polynomial_gf_oracle(1, 1, 3) == Rational(-1, 2));
  for (long r = 0; r <= 4; ++r) {
    const stirnum::TruncatedEGF s = stirnum::cauchy_polynomial_gf_series(r, 14);
    for (long n = 0; n <= 12; ++n)
      CHECK(s.egf_coefficient(static_cast<std::size_t>(n)) ==
            stirnum::cauchy_polynomial_at_integer(n, r));
  }
  CHECK_THROWS_AS(stirnum::cauchy_polynomial_gf_series(-1, 8), std::invalid_argument);
}
