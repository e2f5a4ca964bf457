#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace badred {

using Integer = mpz_class;
using Rational = mpq_class;

// Coefficient-domain hooks shared by the generic polynomial and matrix code.
// Every coefficient type C provides is_zero, one_like, scale, divexact and
// coeff_to_string; a value-initialized C{} is the additive identity.

inline bool is_zero(const Integer& a) { return sgn(a) == 0; }
inline bool is_zero(const Rational& a) { return sgn(a) == 0; }

inline Integer one_like(const Integer&) { return Integer(1); }
inline Rational one_like(const Rational&) { return Rational(1); }

inline Integer scale(const Integer& a, long k) { return Integer(a * k); }
inline Rational scale(const Rational& a, long k) { return Rational(a * k); }

// Exact quotient; the caller guarantees divisibility.
inline Integer divexact(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline Rational divexact(const Rational& a, const Rational& b) { return Rational(a / b); }

Rational inverse(const Rational& a);

// Whether b divides a in the coefficient ring.
inline bool coeff_divides(const Integer& b, const Integer& a) {
  return sgn(b) != 0 && mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t());
}
inline bool coeff_divides(const Rational& b, const Rational&) { return sgn(b) != 0; }

inline std::string coeff_to_string(const Integer& a) { return a.get_str(); }
inline std::string coeff_to_string(const Rational& a) { return a.get_str(); }
inline bool coeff_is_negative(const Integer& a) { return sgn(a) < 0; }
inline bool coeff_is_negative(const Rational& a) { return sgn(a) < 0; }
inline bool coeff_is_atomic(const Integer&) { return true; }
inline bool coeff_is_atomic(const Rational& a) { return a.get_den() == 1; }

inline Integer abs_value(const Integer& a) { return Integer(abs(a)); }

inline bool fits_u64(const Integer& a) { return sgn(a) >= 0 && mpz_sizeinbase(a.get_mpz_t(), 2) <= 64; }

inline std::uint64_t to_u64(const Integer& a) {
  std::uint64_t lo = mpz_getlimbn(a.get_mpz_t(), 0);
  return a == 0 ? 0 : lo;
}

inline Integer from_u64(std::uint64_t v) {
  Integer r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return r;
}

// Non-negative residue of a modulo m (m > 0, m < 2^64).
inline std::uint64_t mod_u64(const Integer& a, std::uint64_t m) {
  Integer r;
  Integer mm = from_u64(m);
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), mm.get_mpz_t());
  return to_u64(r);
}

Integer binomial(unsigned long n, unsigned long k);

// p-adic valuation of a nonzero integer.
unsigned long valuation(const Integer& a, const Integer& p);

}  // namespace badred
