#pragma once

#include <cstddef>

#include "stirnum/polynomial.hpp"
#include "stirnum/rational.hpp"
#include "stirnum/series.hpp"

namespace stirnum {

// Poly-Bernoulli numbers B_n^{(q)} and polynomials B_n^{(q)}(x), q >= 1,
// defined by the generating function Li_q(1-e^{-t})/(1-e^{-t}) * e^{xt}.
// q = 1 recovers the Bernoulli case: B_n^{(1)}(x) = (-1)^n B_n(-x).
// Every routine rejects q < 1 with std::invalid_argument.

/// B_n^{(q)} = (-1)^n sum_k ((-1)^k k!/(k+1)^q) S(n,k).
Rational polybernoulli_number(long n, long q);

/// B_n^{(q)}(x) = sum_k (k!(-1)^k/(k+1)^q) sum_p C(n,p) S(p,k) (-1)^p x^{n-p}.
Polynomial polybernoulli_polynomial(long n, long q);

/// B_n^{(q)}(x) at a point, by the alternating binomial double sum
/// sum_k (1/(k+1)^q) sum_j C(k,j)(-1)^j (x-j)^n.
Rational polybernoulli_bayad(long n, long q, const Rational& x);

/// B_n^{(q)}(-r) for integer r >= 0, via r-Stirling numbers:
/// (-1)^n sum_k (k!(-1)^k/(k+1)^q) S_r(n+r, k+r). Also evaluates the
/// equivalent braced Stirling sum sum_p C(n,p) S(p,k) r^{n-p} and throws
/// std::logic_error if the two forms disagree.
Rational polybernoulli_at_negative_integer(long n, long q, long r);

/// The generating function Li_q(1-e^{-t})/(1-e^{-t}) * e^{xt} as a series
/// with `order` retained coefficients (internally padded for the valuation
/// shift in the division).
TruncatedEGF polybernoulli_gf_series(long q, const Rational& x, std::size_t order);

/// n!-scaled coefficient n of the generating function above; requires N > n.
Rational polybernoulli_gf_oracle(long n, long q, const Rational& x, std::size_t N);

}  // namespace stirnum
