#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace racah {

// Exact rational coefficients.  mpq_class keeps values canonical (lowest
// terms, positive denominator) under arithmetic, so equality of elements
// reduces to structural equality of their term maps.
using Scalar = mpq_class;
using Integer = mpz_class;

inline Scalar frac(long num, long den = 1) {
  if (den == 0) throw std::domain_error("frac: zero denominator");
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

inline Scalar binomial(unsigned long n, unsigned long k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Scalar(b);
}

// base^exp as an exact integer; 0^0 = 1.
inline Integer ipow(long base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), Integer(base).get_mpz_t(), exp);
  return r;
}

// s^n for n >= 0, exactly.
inline Scalar spow(const Scalar& s, long n) {
  if (n < 0) throw std::domain_error("spow: negative exponent");
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), s.get_num().get_mpz_t(), static_cast<unsigned long>(n));
  mpz_pow_ui(den.get_mpz_t(), s.get_den().get_mpz_t(), static_cast<unsigned long>(n));
  return Scalar(num) / Scalar(den);
}

inline std::string to_string(const Scalar& s) { return s.get_str(); }

}  // namespace racah
