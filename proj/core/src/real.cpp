#include "ecint/real.hpp"

#include <stdexcept>
#include <vector>

namespace ecint {

Real Real::from_long(long x, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_si(r.v_, x, MPFR_RNDN);
  return r;
}

Real Real::from_bigint(const BigInt& z, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real Real::from_double(double x, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_d(r.v_, x, MPFR_RNDN);
  return r;
}

Real Real::pow2(long e) {
  Real r(static_cast<mpfr_prec_t>(16));
  mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
  return r;
}

std::string Real::to_string(std::size_t digits) const {
  if (digits == 0) digits = static_cast<std::size_t>(prec() * 0.3010299957) + 3;
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), v_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

Real Real::parse(const std::string& s, mpfr_prec_t prec) {
  Real r(prec);
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("Real::parse: bad literal " + s);
  return r;
}

Real Real::add_up(const Real& a, const Real& b) {
  Real r(std::max(a.prec(), b.prec()));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDU);
  return r;
}

Real Real::mul_up(const Real& a, const Real& b) {
  Real r(std::max(a.prec(), b.prec()));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDU);
  return r;
}

Real Real::div_up(const Real& a, const Real& b) {
  Real r(std::max(a.prec(), b.prec()));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDU);
  return r;
}

Real Real::sqrt_up(const Real& a) {
  Real r(a.prec());
  mpfr_sqrt(r.v_, a.v_, MPFR_RNDU);
  return r;
}

Complex Complex::sqrt() const {
  // principal branch via polar decomposition on |z| and half-angle identities
  mpfr_prec_t p = prec();
  if (is_zero()) return Complex(p);
  Real r = abs();
  // sqrt((r+re)/2) and sign(im)*sqrt((r-re)/2)
  Real half = Real::from_long(1, p) / Real::from_long(2, p);
  Real a = ((r + re) * half).sqrt();
  Real b = ((r - re) * half).sqrt();
  if (im.sign() < 0) b = -b;
  return Complex(a, b);
}

ComplexBall ComplexBall::exact(Complex mid) {
  ComplexBall b;
  b.mid_ = std::move(mid);
  b.rad_ = Real(kRadPrec);
  return b;
}

ComplexBall ComplexBall::from_bigint(const BigInt& z, mpfr_prec_t prec) {
  return from_parts(z, 0, prec);
}

ComplexBall ComplexBall::from_parts(const BigInt& re, const BigInt& im, mpfr_prec_t prec) {
  ComplexBall b(prec);
  b.mid_ = Complex(Real::from_bigint(re, prec), Real::from_bigint(im, prec));
  // rounding slack when an integer does not fit in prec bits
  Real err(kRadPrec);
  if (bit_length(re) > static_cast<std::size_t>(prec))
    err = Real::add_up(err, Real::pow2(static_cast<long>(bit_length(re)) - prec + 1));
  if (bit_length(im) > static_cast<std::size_t>(prec))
    err = Real::add_up(err, Real::pow2(static_cast<long>(bit_length(im)) - prec + 1));
  b.rad_ = err;
  return b;
}

namespace {

/// One-ulp bound for a freshly rounded complex midpoint.
Real ulp_bound(const Complex& z) {
  long e_re = z.re.is_zero() ? -z.prec() * 4 : z.re.exponent();
  long e_im = z.im.is_zero() ? -z.prec() * 4 : z.im.exponent();
  long e = std::max(e_re, e_im) - z.prec() + 2;
  return Real::pow2(e);
}

}  // namespace

ComplexBall ComplexBall::operator+(const ComplexBall& o) const {
  Complex m = mid_ + o.mid_;
  Real r = Real::add_up(Real::add_up(rad_, o.rad_), ulp_bound(m));
  return ComplexBall(std::move(m), std::move(r));
}

ComplexBall ComplexBall::operator-(const ComplexBall& o) const {
  Complex m = mid_ - o.mid_;
  Real r = Real::add_up(Real::add_up(rad_, o.rad_), ulp_bound(m));
  return ComplexBall(std::move(m), std::move(r));
}

ComplexBall ComplexBall::operator*(const ComplexBall& o) const {
  Complex m = mid_ * o.mid_;
  // |a|*rb + |b|*ra + ra*rb, rounded up, plus the midpoint rounding slack
  Real aa = Real::add_up(mid_.abs(), Real::pow2(-mid_.prec() + 2));
  Real bb = Real::add_up(o.mid_.abs(), Real::pow2(-o.mid_.prec() + 2));
  Real r = Real::add_up(Real::mul_up(aa, o.rad_),
                        Real::add_up(Real::mul_up(bb, rad_), Real::mul_up(rad_, o.rad_)));
  r = Real::add_up(r, Real::mul_up(ulp_bound(m), Real::from_long(4, kRadPrec)));
  return ComplexBall(std::move(m), std::move(r));
}

Real ComplexBall::abs_lower() const {
  Real l = mid_.abs() - rad_;
  if (l.sign() < 0) return Real(kRadPrec);
  // widen down by one ulp of the abs computation
  Real slack = Real::pow2(l.is_zero() ? -mid_.prec() * 4 : l.exponent() - mid_.prec() + 2);
  Real out = l - slack;
  if (out.sign() < 0) return Real(kRadPrec);
  return out;
}

ComplexBall ComplexBall::inv() const {
  Real lo = abs_lower();
  if (!(lo > Real(kRadPrec)))
    throw std::domain_error("ComplexBall::inv: ball not separated from zero");
  Complex m = Complex(Real::from_long(1, mid_.prec()), Real(mid_.prec())) / mid_;
  // |1/z - 1/m| <= rad / (|m| * (|m| - rad))
  Real denom = Real::mul_up(mid_.abs(), lo);
  Real r = Real::div_up(rad_, denom);
  r = Real::add_up(r, Real::mul_up(ulp_bound(m), Real::from_long(4, kRadPrec)));
  return ComplexBall(std::move(m), std::move(r));
}

ComplexBall ComplexBall::operator/(const ComplexBall& o) const { return *this * o.inv(); }

ComplexBall ComplexBall::sqrt() const {
  Real lo = abs_lower();
  if (!(lo > Real(kRadPrec)))
    throw std::domain_error("ComplexBall::sqrt: ball not separated from zero");
  Complex m = mid_.sqrt();
  // |sqrt(z)-sqrt(m)| <= rad / (sqrt(|m|-rad) + sqrt(|m|)) <= rad / sqrt(lo)
  Real r = Real::div_up(rad_, Real::sqrt_up(lo));
  r = Real::add_up(r, Real::mul_up(ulp_bound(m), Real::from_long(4, kRadPrec)));
  return ComplexBall(std::move(m), std::move(r));
}

bool ComplexBall::disjoint_from(const ComplexBall& o) const {
  Real d = (mid_ - o.mid_).abs();
  Real rr = Real::add_up(rad_, o.rad_);
  Real slack = Real::pow2(d.is_zero() ? -mid_.prec() * 4 : d.exponent() - mid_.prec() + 3);
  return d - slack > rr;
}

ComplexBall eval_poly_ball(const std::vector<BigInt>& coeffs, const ComplexBall& x) {
  mpfr_prec_t p = x.prec();
  ComplexBall acc(p);
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    acc = acc * x + ComplexBall::from_bigint(coeffs[i], p);
  }
  return acc;
}

Complex eval_poly(const std::vector<Complex>& coeffs, const Complex& x) {
  Complex acc(x.prec());
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

}  // namespace ecint
