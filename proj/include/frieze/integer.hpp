#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace frieze {

/// Arbitrary-precision integer used for every frieze entry and count.
using Integer = mpz_class;
/// Exact rational used by numeric cluster mutation.
using Rational = mpq_class;

inline std::string to_string(const Integer& v) { return v.get_str(); }

inline std::string to_string(const Rational& v) { return v.get_str(); }

inline bool fits_int64(const Integer& v) {
  return mpz_sizeinbase(v.get_mpz_t(), 2) <= 62;
}

inline std::int64_t to_int64(const Integer& v) {
  return static_cast<std::int64_t>(mpz_get_si(v.get_mpz_t()));
}

inline Integer pow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

inline Rational pow(const Rational& base, unsigned long exponent) {
  Rational r(1);
  for (unsigned long i = 0; i < exponent; ++i) r *= base;
  return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace frieze
