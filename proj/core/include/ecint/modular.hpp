#pragma once

#include <cstdint>
#include <vector>

#include "ecint/bigint.hpp"

namespace ecint {

/// Montgomery arithmetic modulo an odd prime p < 2^62.
/// Values are carried in Montgomery form (x * 2^64 mod p) inside hot loops.
struct FpCtx {
  uint64_t p = 0;
  uint64_t ninv = 0;  // -p^{-1} mod 2^64
  uint64_t r2 = 0;    // 2^128 mod p
  uint64_t one = 0;   // 2^64 mod p

  FpCtx() = default;
  explicit FpCtx(uint64_t prime);

  uint64_t redc(unsigned __int128 t) const {
    uint64_t m = static_cast<uint64_t>(t) * ninv;
    unsigned __int128 s = t + static_cast<unsigned __int128>(m) * p;
    uint64_t r = static_cast<uint64_t>(s >> 64);
    return r >= p ? r - p : r;
  }
  uint64_t to_m(uint64_t x) const { return redc(static_cast<unsigned __int128>(x % p) * r2); }
  uint64_t from_m(uint64_t x) const { return redc(x); }
  uint64_t add(uint64_t a, uint64_t b) const {
    uint64_t s = a + b;
    return s >= p ? s - p : s;
  }
  uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p - b; }
  uint64_t neg(uint64_t a) const { return a == 0 ? 0 : p - a; }
  uint64_t mul(uint64_t a, uint64_t b) const { return redc(static_cast<unsigned __int128>(a) * b); }
  uint64_t pow(uint64_t a, uint64_t e) const;  // a in Montgomery form
  uint64_t inv(uint64_t a) const { return pow(a, p - 2); }
};

/// Dense univariate polynomial over F_p; coefficients in Montgomery form,
/// index = degree, normalized so that back() != 0 (empty vector = zero).
using FpVec = std::vector<uint64_t>;

int fp_deg(const FpVec& f);  // -1 for zero (internal convention only)
void fp_trim(FpVec& f);
FpVec fp_add(const FpCtx& F, const FpVec& a, const FpVec& b);
FpVec fp_sub(const FpCtx& F, const FpVec& a, const FpVec& b);
FpVec fp_scale(const FpCtx& F, const FpVec& a, uint64_t k);
FpVec fp_mul(const FpCtx& F, const FpVec& a, const FpVec& b);
/// divrem by monic-or-not divisor (leading coefficient inverted once).
void fp_divrem(const FpCtx& F, const FpVec& a, const FpVec& b, FpVec& q, FpVec& r);
FpVec fp_mod(const FpCtx& F, const FpVec& a, const FpVec& b);
FpVec fp_gcd_monic(const FpCtx& F, FpVec a, FpVec b);
FpVec fp_derivative(const FpCtx& F, const FpVec& a);
uint64_t fp_eval(const FpCtx& F, const FpVec& a, uint64_t x_m);  // x in Montgomery form
FpVec fp_make_monic(const FpCtx& F, const FpVec& a);
FpVec fp_powmod(const FpCtx& F, const FpVec& base, const BigInt& e, const FpVec& mod);

/// Newton interpolation through (nodes[i], values[i]); nodes are small
/// distinct integers given in plain form, values in Montgomery form.
/// Returns monomial-basis coefficients in Montgomery form.
FpVec fp_interpolate(const FpCtx& F, const std::vector<uint64_t>& nodes, const FpVec& values);

/// Subresultant polynomials S_0..S_{min(degA,degB)-1} of A, B over F_p,
/// matching the integer subresultant determinant convention reduced mod p.
/// S[j] may be the zero polynomial. Requires degA >= 1, degB >= 1.
std::vector<FpVec> subresultant_chain(const FpCtx& F, const FpVec& A, const FpVec& B);

/// Resultant via the subresultant chain (S_0 constant term), degA,degB >= 1.
uint64_t fp_resultant(const FpCtx& F, const FpVec& A, const FpVec& B);

/// Deterministic descending sequence of primes just below 2^62.
std::vector<uint64_t> modular_primes(std::size_t count, std::size_t skip = 0);
/// Deterministic small primes (for factorization), starting near `start`.
std::vector<uint64_t> small_primes(std::size_t count, uint64_t start = 1000);

/// Incremental CRT accumulator over BigInt residue vectors.
struct CrtAccum {
  BigInt modulus = 1;
  std::vector<BigInt> residues;  // canonical in [0, modulus)

  void init(std::size_t n) { residues.assign(n, BigInt(0)); modulus = 1; }
  /// Combine with a prime image (values in plain form mod p).
  void add_prime(uint64_t p, const std::vector<uint64_t>& vals);
  /// Symmetric representative of residue i.
  BigInt symmetric(std::size_t i) const;
};

}  // namespace ecint
