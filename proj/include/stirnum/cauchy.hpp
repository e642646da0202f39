#pragma once

#include <cstddef>

#include "stirnum/rational.hpp"
#include "stirnum/series.hpp"

namespace stirnum {

// Cauchy numbers c_n (EGF t/ln(1+t)), poly-Cauchy numbers c_n^{(q)}, and
// Cauchy polynomials c_n(z) at non-negative integer arguments z = r
// (EGF t/((1+t)^r ln(1+t))), each with a Stirling-sum route and a
// generating-function route.

/// c_n = sum_k s(n,k)/(k+1), signed first-kind Stirling numbers.
Rational cauchy_number(long n);

/// c_n = integral_0^1 x(x-1)...(x-n+1) dx, by termwise integration of the
/// falling factorial.
Rational cauchy_number_integral(long n);

/// t/ln(1+t) with `order` retained coefficients.
TruncatedEGF cauchy_gf_series(std::size_t order);

/// n!-scaled coefficient n of t/ln(1+t); requires N > n.
Rational cauchy_gf_oracle(long n, std::size_t N);

/// c_n^{(q)} = sum_k s(n,k)/(k+1)^q, q >= 1 (throws std::invalid_argument
/// for q < 1).
Rational poly_cauchy_number(long n, long q);

/// c_n(r) = sum_k s_r(n+r, k+r)/(k+1) for integer r >= 0.
Rational cauchy_polynomial_at_integer(long n, long r);

/// t/((1+t)^r ln(1+t)) with `order` retained coefficients.
TruncatedEGF cauchy_polynomial_gf_series(long r, std::size_t order);

/// n!-scaled coefficient n of t/((1+t)^r ln(1+t)); requires N > n.
Rational cauchy_polynomial_gf_oracle(long n, long r, std::size_t N);

}  // namespace stirnum
