#pragma once

#include <cstddef>

#include "stirnum/polynomial.hpp"
#include "stirnum/rational.hpp"
#include "stirnum/series.hpp"

namespace stirnum {

// Bernoulli numbers and polynomials, convention B_1 = -1/2 (B_n = B_n(0)).
// Each routine below is an independent computation route; route agreement is
// part of the verification suite.

/// B_n = sum_k ((-1)^k k!/(k+1)) S(n,k).
Rational bernoulli_number(long n);

/// B_n(x) = sum_p C(n,p) B_p x^{n-p}; degree-n monic, constant term B_n.
Polynomial bernoulli_polynomial(long n);

/// B_n(x) built from the double Stirling sum
/// sum_k ((-1)^k k!/(k+1)) sum_p C(n,p) S(p,k) x^{n-p}.
Polynomial bernoulli_polynomial_stirling(long n);

/// B_n(x) at a point, by the binomial double sum
/// sum_k (1/(k+1)) sum_j C(k,j)(-1)^j (x+j)^n.
Rational bernoulli_nielsen(long n, const Rational& x);

/// B_n(x) at a point, by iterated forward differences of the monomial:
/// sum_k (-1)^k (Delta^k t^n)(x) / (k+1).
Rational bernoulli_todorov(long n, const Rational& x);

/// B_n(r) at a non-negative integer via r-Stirling numbers:
/// sum_k ((-1)^k k!/(k+1)) S_r(n+r, k+r).
Rational bernoulli_at_integer_rstirling(long n, long r);

/// The generating function t e^{xt}/(e^t - 1) with `order` retained
/// coefficients (internally padded for the valuation shift in the division).
TruncatedEGF bernoulli_gf_series(const Rational& x, std::size_t order);

/// n!-scaled coefficient n of t e^{xt}/(e^t - 1), which is B_n(x); requires
/// N > n.
Rational bernoulli_gf_oracle(long n, const Rational& x, std::size_t N);

}  // namespace stirnum
