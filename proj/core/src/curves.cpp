#include "ecint/curves.hpp"

#include <algorithm>
#include <stdexcept>

#include "ecint/polyops.hpp"

namespace ecint {

namespace {

const MPoly& X() {
  static const MPoly x = MPoly::variable("x");
  return x;
}

}  // namespace

MPoly WeierstrassCurve::rhs() const {
  return X().pow(3) + a2 * X().pow(2) + a4 * X() + a6;
}

MPoly WeierstrassCurve::discriminant16() const {
  // 16*disc = 16(-4 a2^3 a6 + a2^2 a4^2 + 18 a2 a4 a6 - 4 a4^3 - 27 a6^2)
  MPoly d = a2.pow(3) * a6 * BigInt(-4) + a2.pow(2) * a4.pow(2) + a2 * a4 * a6 * BigInt(18) -
            a4.pow(3) * BigInt(4) - a6.pow(2) * BigInt(27);
  return d * BigInt(16);
}

WeierstrassCurve WeierstrassCurve::ens_model() {
  MPoly lam = MPoly::variable("lambda");
  WeierstrassCurve c;
  c.a2 = -(lam + MPoly::constant(1));
  c.a4 = lam;
  c.a6 = MPoly();
  return c;
}

WeierstrassCurve WeierstrassCurve::cube_root_curve() {
  MPoly a = MPoly::variable("a");
  WeierstrassCurve c;
  c.a2 = -a;
  c.a4 = -a;
  c.a6 = a * a;
  return c;
}

WeierstrassCurve WeierstrassCurve::short_form(const BigInt& A, const BigInt& B) {
  WeierstrassCurve c;
  c.a2 = MPoly();
  c.a4 = MPoly::constant(A);
  c.a6 = MPoly::constant(B);
  return c;
}

const MPoly& DivisionPolySet::f(unsigned n) {
  auto it = cache_.find(n);
  if (it != cache_.end()) return it->second;
  MPoly val;
  if (n == 0) {
    val = MPoly();
  } else if (n == 1 || n == 2) {
    val = MPoly::constant(1);
  } else if (n == 3) {
    val = X().pow(4) * BigInt(3) + curve_.b2() * X().pow(3) + curve_.b4() * X().pow(2) * BigInt(3) +
          curve_.b6() * X() * BigInt(3) + curve_.b8();
  } else if (n == 4) {
    val = X().pow(6) * BigInt(2) + curve_.b2() * X().pow(5) + curve_.b4() * X().pow(4) * BigInt(5) +
          curve_.b6() * X().pow(3) * BigInt(10) + curve_.b8() * X().pow(2) * BigInt(10) +
          (curve_.b2() * curve_.b8() - curve_.b4() * curve_.b6()) * X() +
          (curve_.b4() * curve_.b8() - curve_.b6() * curve_.b6());
  } else if (n % 2 == 1) {
    unsigned m = (n - 1) / 2;
    MPoly q4 = (curve_.rhs() * BigInt(4)).pow(2);
    if (m % 2 == 0)
      val = f(m + 2) * f(m).pow(3) * q4 - f(m - 1) * f(m + 1).pow(3);
    else
      val = f(m + 2) * f(m).pow(3) - f(m - 1) * f(m + 1).pow(3) * q4;
  } else {
    unsigned m = n / 2;
    val = f(m) * (f(m + 2) * f(m - 1).pow(2) - f(m - 2) * f(m + 1).pow(2));
  }
  return cache_.emplace(n, std::move(val)).first->second;
}

MPoly division_poly(const WeierstrassCurve& curve, unsigned n) {
  if (n == 0) throw std::invalid_argument("division_poly: n must be >= 1");
  DivisionPolySet set(curve);
  return set.f(n);
}

void QuarticModel::model_map(MPoly& num, MPoly& den) {
  MPoly d = MPoly::variable("delta");
  num = (d * d + MPoly::constant(1)) * (d * X() - MPoly::constant(1));
  den = d * BigInt(2) * (X() - d);
}

void QuarticModel::lambda_map(MPoly& num, MPoly& den) {
  MPoly d = MPoly::variable("delta");
  num = (d * d + MPoly::constant(1)).pow(2);
  den = d * d * BigInt(4);
}

MPoly QuarticModel::modified_division_poly(unsigned p) {
  static const unsigned admissible[] = {3, 5, 7, 11, 13, 17};
  if (std::find(std::begin(admissible), std::end(admissible), p) == std::end(admissible))
    throw std::invalid_argument("modified_division_poly: p must be in {3,5,7,11,13,17}");
  MPoly fp = division_poly(WeierstrassCurve::ens_model(), p);
  MPoly lnum, lden;
  lambda_map(lnum, lden);
  MPoly g = fp.substitute_rational("lambda", lnum, lden);
  MPoly mnum, mden;
  model_map(mnum, mden);
  MPoly h = g.substitute_rational("x", mnum, mden);
  // primitive part with respect to x: strip the delta-only content
  auto coeffs = h.univariate_coeffs("x");
  MPoly cont;
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    cont = cont.is_zero() ? c.content_primitive().primitive * c.content() : gcd_poly(cont, c);
  }
  MPoly F = *h.divide_exact(cont);
  F = F.primitive_part();
  // sign: coefficient of x^((p^2-1)/2) delta^((p^2-1)/8) must be positive
  unsigned dx = (p * p - 1) / 2, dd = (p * p - 1) / 8;
  MPoly lead = F.coeff_of("x", dx).coeff_of("delta", dd);
  if (lead.is_zero())
    throw std::logic_error("modified_division_poly: expected leading monomial missing");
  if (lead.lc_sign() < 0) F = -F;
  return F;
}

JInvariant j_invariant_edelta() {
  MPoly d = MPoly::variable("delta");
  MPoly d4 = d.pow(4);
  MPoly t_num = d.pow(8) + d4 * BigInt(14) + MPoly::constant(1);  // delta^4(T+14)
  MPoly t_den = d4;
  JInvariant j;
  j.num = t_num.pow(3) * BigInt(16);
  // (T-2) = (delta^4-1)^2 / delta^4
  MPoly tm2 = (d4 - MPoly::constant(1)).pow(2);
  j.den = t_den * tm2.pow(2);
  return j;
}

JInvariant j_invariant_legendre_pullback() {
  MPoly d = MPoly::variable("delta");
  // lambda = (delta^2+1)^2 / (4 delta^2)
  MPoly ln = (d * d + MPoly::constant(1)).pow(2);
  MPoly ld = d * d * BigInt(4);
  // j = 256 (l^2 - l + 1)^3 / (l^2 (l-1)^2)
  MPoly q_num = ln * ln - ln * ld + ld * ld;  // (l^2-l+1) * ld^2
  JInvariant j;
  j.num = q_num.pow(3) * BigInt(256);
  MPoly lm1 = ln - ld;  // (l-1) * ld
  j.den = ln.pow(2) * lm1.pow(2) * ld.pow(2);
  return j;
}

bool ProjValue::operator<(const ProjValue& o) const {
  if (infinite != o.infinite) return o.infinite;
  if (infinite) return false;
  if (re != o.re) return re < o.re;
  return im < o.im;
}

std::vector<ProjValue> torsion_image_orbit(const ProjValue& a) {
  if (a.infinite || (a.re == 0 && a.im == 0)) {
    std::vector<ProjValue> out{a};
    return out;
  }
  auto neg = [](const ProjValue& v) { return ProjValue::gaussian(-v.re, -v.im); };
  auto inv = [](const ProjValue& v) {
    mpq_class n = v.re * v.re + v.im * v.im;
    return ProjValue::gaussian(v.re / n, -v.im / n);
  };
  std::vector<ProjValue> out{a, neg(a), inv(a), neg(inv(a))};
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::pair<std::vector<ProjValue>, std::vector<ProjValue>> two_and_four_torsion_images(
    const mpq_class& delta) {
  mpq_class d4 = delta * delta * delta * delta;
  if (delta == 0 || d4 == 1)
    throw std::invalid_argument("two_and_four_torsion_images: delta^4 must avoid {0, 1}");
  auto two = torsion_image_orbit(ProjValue::rational(delta));
  std::vector<ProjValue> four{
      ProjValue::rational(0),          ProjValue::infinity(),
      ProjValue::rational(1),          ProjValue::rational(-1),
      ProjValue::gaussian(0, 1),       ProjValue::gaussian(0, -1),
  };
  std::sort(four.begin(), four.end());
  return {two, four};
}

}  // namespace ecint
