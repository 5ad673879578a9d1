#pragma once

#include <gmpxx.h>

namespace wwgm {

// C(n, k); zero outside 0 <= k <= n.
mpz_class binomial(long n, long k);
mpz_class factorial(long n);
// n (n-1) ... (n-k+1)
mpz_class falling_factorial(long n, long k);

}  // namespace wwgm
