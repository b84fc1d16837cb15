#pragma once

#include <optional>
#include <vector>

#include "ecint/curves.hpp"
#include "ecint/real.hpp"

namespace ecint {

/// Numeric curve y^2 = x^3 + a2 x^2 + a4 x + a6 over high-precision complex.
struct OracleCurve {
  Complex a2, a4, a6;
  mpfr_prec_t prec = 256;

  Complex rhs(const Complex& x) const { return ((x + a2) * x + a4) * x + a6; }
  static OracleCurve ens_at(const Complex& delta, mpfr_prec_t prec);
};

struct OraclePoint {
  bool infinity = true;
  Complex x, y;
};

/// Affine group law with identity detection at tolerance 2^-(prec/2).
OraclePoint oracle_add(const OracleCurve& c, const OraclePoint& p, const OraclePoint& q);

struct TorsionPoint {
  Complex x;
  unsigned order;  // exact order, verified through the addition chain
};

/// X-coordinates of all nonzero n-torsion points, found as roots of the
/// division polynomials and verified point-by-point through the group law
/// (k*P for k = 1..n; the first identity hit is the exact order and must
/// divide n). n <= 20, precision >= 128.
std::vector<TorsionPoint> numeric_torsion_oracle(const OracleCurve& curve, unsigned n,
                                                 mpfr_prec_t precision);

/// Inverse model transform: X on the Legendre-style model back to the
/// quartic coordinate, x = (2 delta^2 X - delta^2 - 1) / (delta (2X - delta^2 - 1)).
/// Returns nullopt when the image is the point at infinity of the quartic chart.
std::optional<Complex> quartic_x_from_model(const Complex& X, const Complex& delta);

}  // namespace ecint
