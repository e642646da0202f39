#include "stirnum/bigint.hpp"

#include <stdexcept>

namespace stirnum {

Int binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be non-negative");
  if (k < 0 || k > n) return 0;
  Int result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

Int factorial(unsigned long n) {
  Int result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

Int int_pow(const Int& base, unsigned long e) {
  Int result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), e);
  return result;
}

}  // namespace stirnum
