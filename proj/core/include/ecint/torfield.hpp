#pragma once

#include <array>
#include <string>

#include "ecint/mpoly.hpp"

namespace ecint {

/// Polynomial with rational coefficients carried as (integer numerators,
/// one uniform positive denominator).
struct RatPoly {
  MPoly num = MPoly();
  BigInt den = 1;

  static RatPoly of(MPoly p) { return RatPoly{std::move(p), 1}; }
  static RatPoly frac(MPoly p, BigInt d);
  void reduce();
  bool is_zero() const { return num.is_zero(); }

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  RatPoly operator-() const { return RatPoly{-num, den}; }
  bool operator==(const RatPoly& o) const;
  RatPoly pow(unsigned e) const;
  std::string to_string() const;
};

/// Monic quartic x^4 + p3 x^3 + p2 x^2 + p1 x + p0 over Q[a].
struct MonicQuartic {
  std::array<RatPoly, 4> c;  // c[k] multiplies x^k, k = 0..3

  RatPoly eval(const RatPoly& x) const;
};

/// Monic cubic x^3 + q2 x^2 + q1 x + q0 over Q[a].
struct MonicCubic {
  std::array<RatPoly, 3> c;

  RatPoly eval(const RatPoly& x) const;
  bool operator==(const MonicCubic& o) const { return c[0] == o.c[0] && c[1] == o.c[1] && c[2] == o.c[2]; }
};

/// psi_3 / 3 of y^2 = x^3 - a x^2 - a x + a^2, monic quartic over Q[a]:
/// x^4 - (4/3) a x^3 - 2 a x^2 + 4 a^2 x - (4/3) a^3 - (1/3) a^2.
MonicQuartic f3_of_cube_curve();

/// Cubic whose roots are the pairing sums a1a2+a3a4, a1a3+a2a4, a1a4+a2a3
/// of the quartic's roots, via elementary symmetric function reduction.
MonicCubic resolvent_cubic(const MonicQuartic& q);

/// Verifies rc(-(2/3)a - (4/3)a t) == 0 in Q[a, t] / (t^3 - (a-1)^2).
bool cube_root_identity_check();
/// Same check against an arbitrary cubic (exposed for fault-injection tests).
bool cube_root_identity_holds(const MonicCubic& rc);

/// Verifies 16(T+14)^3/(T-2)^2 == 256(l^2-l+1)^3/(l^2(l-1)^2) with
/// T = delta^4 + delta^-4 and l = (delta+1/delta)^2/4, by cross-multiplied
/// exact expansion.
bool lambda_j_equivalence_check();

/// Discriminant of a monic quartic / cubic over Q[a] (for the classical
/// disc(q) == disc(resolvent_cubic(q)) identity).
RatPoly quartic_discriminant(const MonicQuartic& q);
RatPoly cubic_discriminant(const MonicCubic& c);

}  // namespace ecint
