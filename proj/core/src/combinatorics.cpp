#include "wwgm/combinatorics.hpp"

#include "wwgm/errors.hpp"

namespace wwgm {

mpz_class binomial(long n, long k) {
  if (n < 0) throw DomainError("binomial of negative integer");
  if (k < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

mpz_class factorial(long n) {
  if (n < 0) throw DomainError("factorial of negative integer");
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

mpz_class falling_factorial(long n, long k) {
  if (k < 0) throw DomainError("negative falling factorial order");
  mpz_class out = 1;
  for (long j = 0; j < k; ++j) out *= (n - j);
  return out;
}

}  // namespace wwgm
