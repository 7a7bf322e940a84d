#pragma once

#include <gmpxx.h>

namespace edgering {

// All counting and LP arithmetic is exact: arbitrary-precision integers and
// rationals (GMP). Floating point is not used anywhere in the toolkit.
using Int = mpz_class;
using Rat = mpq_class;

inline Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace edgering
