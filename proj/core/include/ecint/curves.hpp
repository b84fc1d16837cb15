#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ecint/mpoly.hpp"

namespace ecint {

/// y^2 = x^3 + a2 x^2 + a4 x + a6 with polynomial coefficients in parameters.
struct WeierstrassCurve {
  MPoly a2, a4, a6;

  /// Right-hand side cubic as a polynomial in "x".
  MPoly rhs() const;
  /// b-invariants of the model (a1 = a3 = 0).
  MPoly b2() const { return a2 * BigInt(4); }
  MPoly b4() const { return a4 * BigInt(2); }
  MPoly b6() const { return a6 * BigInt(4); }
  MPoly b8() const { return a2 * a6 * BigInt(4) - a4 * a4; }
  /// 16 * disc; nonzero iff the curve is nonsingular.
  MPoly discriminant16() const;

  /// Legendre-style nonsingular model of the quartic family,
  /// Y^2 = X(X-1)(X-lambda), coefficients in the parameter "lambda".
  static WeierstrassCurve ens_model();
  /// y^2 = (x-a)(x+sqrt a)(x-sqrt a) = x^3 - a x^2 - a x + a^2, parameter "a".
  static WeierstrassCurve cube_root_curve();
  static WeierstrassCurve short_form(const BigInt& A, const BigInt& B);
};

/// Division polynomials of a curve in the f_n normalization:
/// psi_n = f_n for odd n, psi_n = (2y) * f_n for even n.
class DivisionPolySet {
 public:
  explicit DivisionPolySet(WeierstrassCurve curve) : curve_(std::move(curve)) {}

  const WeierstrassCurve& curve() const { return curve_; }
  /// f_n as a polynomial in "x" and the curve parameters.
  const MPoly& f(unsigned n);
  bool carries_2y(unsigned n) const { return n % 2 == 0; }

 private:
  WeierstrassCurve curve_;
  std::map<unsigned, MPoly> cache_;
};

/// psi_n of the given curve; n >= 1. For odd n this is a polynomial in x of
/// degree (n^2-1)/2; for even n the 2y factor is carried separately and the
/// returned polynomial is psi_n / (2y).
MPoly division_poly(const WeierstrassCurve& curve, unsigned n);

/// The quartic family y^2 = x^4 - (delta^2 + 1/delta^2) x^2 + 1 with
/// distinguished origin (delta, 0) and projection (x, y) -> x.
struct QuarticModel {
  /// Modified division polynomial F_p(x, delta) of the family, primitive,
  /// sign fixed so the coefficient of x^((p^2-1)/2) delta^((p^2-1)/8) is
  /// positive. p must be an odd prime in {3,5,7,11,13,17}.
  static MPoly modified_division_poly(unsigned p);

  /// Substitution X = (delta^2+1)(delta x - 1) / (2 delta (x - delta)).
  static void model_map(MPoly& num, MPoly& den);
  /// lambda = (delta^2+1)^2 / (4 delta^2).
  static void lambda_map(MPoly& num, MPoly& den);
};

/// j(E_delta) = 16 (delta^4 + delta^-4 + 14)^3 / (delta^4 + delta^-4 - 2)^2,
/// returned as a denominator-cleared (numerator, denominator) pair in delta.
struct JInvariant {
  MPoly num, den;
};
JInvariant j_invariant_edelta();
/// Standard j of the Legendre model with lambda = (delta+1/delta)^2 / 4,
/// cleared to the same shape; equal to j_invariant_edelta symbolically.
JInvariant j_invariant_legendre_pullback();

/// Exact projective value over the Gaussian rationals: re + im*i, or infinity.
struct ProjValue {
  bool infinite = false;
  mpq_class re, im;

  static ProjValue infinity() { ProjValue v; v.infinite = true; return v; }
  static ProjValue rational(mpq_class r) { ProjValue v; v.re = std::move(r); return v; }
  static ProjValue gaussian(mpq_class r, mpq_class i) {
    ProjValue v;
    v.re = std::move(r);
    v.im = std::move(i);
    return v;
  }
  bool operator==(const ProjValue& o) const {
    return infinite == o.infinite && (infinite || (re == o.re && im == o.im));
  }
  bool operator<(const ProjValue& o) const;
};

/// Orbit closure {a, -a, 1/a, -1/a} with degeneracies collapsed.
std::vector<ProjValue> torsion_image_orbit(const ProjValue& a);

/// ({delta, -delta, 1/delta, -1/delta}, {0, inf, 1, -1, i, -i});
/// requires delta^4 not in {0, 1}.
std::pair<std::vector<ProjValue>, std::vector<ProjValue>> two_and_four_torsion_images(
    const mpq_class& delta);

}  // namespace ecint
