#include "ecint/torfield.hpp"

#include <stdexcept>

#include "ecint/curves.hpp"
#include "ecint/polyops.hpp"
#include "ecint/resultant.hpp"

namespace ecint {

RatPoly RatPoly::frac(MPoly p, BigInt d) {
  if (d == 0) throw std::invalid_argument("RatPoly: zero denominator");
  RatPoly r{std::move(p), std::move(d)};
  r.reduce();
  return r;
}

void RatPoly::reduce() {
  if (num.is_zero()) {
    den = 1;
    return;
  }
  if (den < 0) {
    den = -den;
    num = -num;
  }
  BigInt g = bigint_gcd(num.content(), den);
  if (g > 1) {
    num = *num.divide_exact(MPoly::constant(g));
    BigInt q;
    mpz_divexact(q.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
    den = q;
  }
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  RatPoly r{a.num * b.den + b.num * a.den, a.den * b.den};
  r.reduce();
  return r;
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  RatPoly r{a.num * b.num, a.den * b.den};
  r.reduce();
  return r;
}

bool RatPoly::operator==(const RatPoly& o) const { return num * o.den == o.num * den; }

RatPoly RatPoly::pow(unsigned e) const {
  RatPoly r = RatPoly::of(MPoly::constant(1));
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::string RatPoly::to_string() const {
  return "(" + num.to_string() + ") / " + den.get_str();
}

RatPoly MonicQuartic::eval(const RatPoly& x) const {
  return x.pow(4) + c[3] * x.pow(3) + c[2] * x.pow(2) + c[1] * x + c[0];
}

RatPoly MonicCubic::eval(const RatPoly& x) const {
  return x.pow(3) + c[2] * x.pow(2) + c[1] * x + c[0];
}

MonicQuartic f3_of_cube_curve() {
  MPoly psi3 = division_poly(WeierstrassCurve::cube_root_curve(), 3);
  // psi3 = 3x^4 - 4a x^3 - 6a x^2 + 12a^2 x - 4a^3 - a^2; divide by 3
  auto coeffs = psi3.univariate_coeffs("x");
  if (coeffs.size() != 5 || coeffs[4] != MPoly::constant(3))
    throw std::logic_error("f3_of_cube_curve: unexpected psi_3 shape");
  MonicQuartic q;
  for (int k = 0; k < 4; ++k) q.c[k] = RatPoly::frac(coeffs[k], 3);
  return q;
}

MonicCubic resolvent_cubic(const MonicQuartic& q) {
  // For x^4 + p x^3 + q x^2 + r x + s with pairing-sum roots:
  //   e1 = q,  e2 = p r - 4 s,  e3 = r^2 + p^2 s - 4 q s.
  const RatPoly& p = q.c[3];
  const RatPoly& qq = q.c[2];
  const RatPoly& r = q.c[1];
  const RatPoly& s = q.c[0];
  RatPoly four = RatPoly::of(MPoly::constant(4));
  MonicCubic rc;
  rc.c[2] = -qq;
  rc.c[1] = p * r - four * s;
  rc.c[0] = -(r * r + p * p * s - four * qq * s);
  return rc;
}

namespace {

/// Reduce t-powers by t^3 -> (a-1)^2 inside Q[a, t].
RatPoly reduce_t_cube(RatPoly f) {
  MPoly rel = (MPoly::variable("a") - MPoly::constant(1)).pow(2);
  while (f.num.degree_or_zero("t") >= 3) {
    auto coeffs = f.num.univariate_coeffs("t");
    MPoly reduced;
    for (uint32_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k].is_zero()) continue;
      MPoly term = coeffs[k];
      uint32_t e = k;
      while (e >= 3) {
        term = term * rel;
        e -= 3;
      }
      reduced = reduced + term * MPoly::variable("t", e);
    }
    f.num = reduced;
  }
  f.reduce();
  return f;
}

}  // namespace

bool cube_root_identity_holds(const MonicCubic& rc) {
  // x = -(2/3) a - (4/3) a t
  MPoly a = MPoly::variable("a"), t = MPoly::variable("t");
  RatPoly x = RatPoly::frac(a * BigInt(-2) - a * t * BigInt(4), 3);
  RatPoly val = reduce_t_cube(rc.eval(x));
  return val.is_zero();
}

bool cube_root_identity_check() {
  return cube_root_identity_holds(resolvent_cubic(f3_of_cube_curve()));
}

bool lambda_j_equivalence_check() {
  JInvariant lhs = j_invariant_edelta();
  JInvariant rhs = j_invariant_legendre_pullback();
  return lhs.num * rhs.den == rhs.num * lhs.den;
}

RatPoly quartic_discriminant(const MonicQuartic& q) {
  
  // closed form in the coefficients via the resultant of integer clearings.
  // Clear denominators: f_int = D^4 f(x / 1) scaled -- work directly with
  // resultant over Q by clearing a common denominator.
  BigInt D = 1;  // lcm of the coefficient denominators
  for (const auto& ci : q.c) {
    BigInt g = bigint_gcd(D, ci.den);
    D = D / g * ci.den;
  }
  // g(x) = D * f(x) has integer polynomial coefficients
  MPoly x = MPoly::variable("x");
  MPoly g = x.pow(4) * D;
  for (int k = 0; k < 4; ++k) {
    BigInt scale;
    mpz_divexact(scale.get_mpz_t(), D.get_mpz_t(), q.c[k].den.get_mpz_t());
    g = g + q.c[k].num * scale * x.pow(k);
  }
  MPoly res = resultant_prs(g, g.derivative("x"), "x");
  // disc(f) = Res(g, g') / (lc(g) * D^(2n-2)), n = 4, sign +
  return RatPoly::frac(res, D * bigint_pow(D, 6));
}

RatPoly cubic_discriminant(const MonicCubic& c) {
  BigInt D = 1;
  for (const auto& ci : c.c) {
    BigInt g = bigint_gcd(D, ci.den);
    D = D / g * ci.den;
  }
  MPoly x = MPoly::variable("x");
  MPoly g = x.pow(3) * D;
  for (int k = 0; k < 3; ++k) {
    BigInt scale;
    mpz_divexact(scale.get_mpz_t(), D.get_mpz_t(), c.c[k].den.get_mpz_t());
    g = g + c.c[k].num * scale * x.pow(k);
  }
  MPoly res = resultant_prs(g, g.derivative("x"), "x");
  // disc(f) = -Res(g, g') / (lc(g) * D^(2n-2)), n = 3
  RatPoly out = RatPoly::frac(res, D * bigint_pow(D, 4));
  out.num = -out.num;
  return out;
}

}  // namespace ecint
