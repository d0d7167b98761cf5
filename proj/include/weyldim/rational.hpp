#ifndef WEYLDIM_RATIONAL_HPP
#define WEYLDIM_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace weyldim {

// Exact coefficient arithmetic. mpq_class keeps values in lowest terms with
// positive denominator, which is exactly the invariant we need.
using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(unsigned long k) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

inline Int binomial_uu(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// C(u, k) as the polynomial u(u-1)...(u-k+1)/k!, valid for any integer u
// (negative included); C(u, 0) = 1.
inline Int binomial_int(const Int& u, int k) {
  if (k < 0) return Int(0);
  Int num(1);
  for (int i = 0; i < k; ++i) num *= u - i;
  return num / factorial(static_cast<unsigned long>(k));
}

inline Int binomial_int(long u, int k) { return binomial_int(Int(u), k); }

// "p/q" (or plain "p") -> canonical rational
Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& q);

}  // namespace weyldim

#endif
