#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace ecint {

/// Arbitrary-precision signed integer. Sign-magnitude, canonical zero,
/// exact decimal round-trip. Backed by GMP.
using BigInt = mpz_class;

inline BigInt bigint_from_string(const std::string& s) { return BigInt(s, 10); }

inline std::string to_string(const BigInt& z) { return z.get_str(10); }

inline BigInt bigint_pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline BigInt bigint_abs(const BigInt& z) { return z < 0 ? BigInt(-z) : z; }

inline BigInt bigint_gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/// 2-adic valuation; v2(0) = 0 by convention here (callers check zero first).
inline unsigned long v2(const BigInt& z) {
  if (z == 0) return 0;
  return mpz_scan1(z.get_mpz_t(), 0);
}

inline size_t bit_length(const BigInt& z) {
  if (z == 0) return 0;
  return mpz_sizeinbase(z.get_mpz_t(), 2);
}

inline uint64_t mod_u64(const BigInt& z, uint64_t p) {
  BigInt r = z % BigInt(static_cast<unsigned long>(p));
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

}  // namespace ecint
