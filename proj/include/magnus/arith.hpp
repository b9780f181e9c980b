#pragma once

// Exact integer and rational arithmetic. Everything downstream (series
// coefficients, relation matrices, collected exponents) runs on these types;
// there is no floating point anywhere in the library.

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "magnus/errors.hpp"

namespace magnus {

using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Int &num, const Int &den) {
  if (den == 0)
    throw DomainError("rational with zero denominator");
  Rational r;
  r.get_num() = num;
  r.get_den() = den;
  r.canonicalize();
  return r;
}

inline std::string to_string(const Int &z) { return z.get_str(); }

/// Canonical text for a rational: "p" when the denominator is 1, else "p/q".
inline std::string to_string(const Rational &r) {
  if (r.get_den() == 1)
    return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Floor division and the matching remainder (0 <= rem < |d| for d > 0).
inline void floor_divmod(const Int &n, const Int &d, Int &q, Int &r) {
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
}

inline Int ipow(Int base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// Generalized binomial coefficient C(e, k) = e(e-1)...(e-k+1) / k! for
/// rational e and k >= 0.
inline Rational binomial(const Rational &e, unsigned k) {
  Rational num = 1;
  for (unsigned j = 0; j < k; ++j)
    num *= e - Rational(j);
  Int kfact = 1;
  for (unsigned j = 2; j <= k; ++j)
    kfact *= j;
  return num / Rational(kfact);
}

/// 2^{-n} as an exact rational.
inline Rational pow2_inv(unsigned n) {
  return make_rational(1, ipow(2, n));
}

inline bool fits_long(const Int &z) { return z.fits_slong_p(); }

inline long to_long(const Int &z) {
  if (!z.fits_slong_p())
    throw ResourceError("integer too large for machine word: " + z.get_str());
  return z.get_si();
}

} // namespace magnus
