#pragma once

#include <gmpxx.h>

namespace stirnum {

// Arbitrary-precision integer. All combinatorial tables and coefficients use
// this type; overflow is not a failure mode anywhere in the library.
using Int = mpz_class;

/// n-choose-k. Returns 0 when k < 0 or k > n. Requires n >= 0.
Int binomial(long n, long k);

/// n! for n >= 0.
Int factorial(unsigned long n);

/// base^e with the convention 0^0 = 1.
Int int_pow(const Int& base, unsigned long e);

}  // namespace stirnum
