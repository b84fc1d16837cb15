#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "ecint/bigint.hpp"

namespace ecint {

/// Arbitrary-precision real backed by MPFR. Precision is fixed per value;
/// binary operations work at the larger operand precision.
class Real {
 public:
  Real() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
  explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept { mpfr_init2(v_, 64); mpfr_swap(v_, o.v_); }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  static Real from_long(long x, mpfr_prec_t prec);
  static Real from_bigint(const BigInt& z, mpfr_prec_t prec);
  static Real from_double(double x, mpfr_prec_t prec);
  /// 2^e at minimal precision.
  static Real pow2(long e);

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_); }
  int sign() const { return mpfr_sgn(v_); }
  long exponent() const { return mpfr_get_exp(v_); }  // valid for nonzero
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string to_string(std::size_t digits = 0) const;
  static Real parse(const std::string& s, mpfr_prec_t prec);

  friend Real operator+(const Real& a, const Real& b) { return bin(a, b, mpfr_add); }
  friend Real operator-(const Real& a, const Real& b) { return bin(a, b, mpfr_sub); }
  friend Real operator*(const Real& a, const Real& b) { return bin(a, b, mpfr_mul); }
  friend Real operator/(const Real& a, const Real& b) { return bin(a, b, mpfr_div); }
  Real operator-() const {
    Real r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_); }

  Real abs() const {
    Real r(prec());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
  }
  Real sqrt() const {
    Real r(prec());
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    return r;
  }
  /// Rounded-up flavors for radius bookkeeping.
  static Real add_up(const Real& a, const Real& b);
  static Real mul_up(const Real& a, const Real& b);
  static Real div_up(const Real& a, const Real& b);
  static Real sqrt_up(const Real& a);

 private:
  template <typename F>
  static Real bin(const Real& a, const Real& b, F op) {
    Real r(std::max(a.prec(), b.prec()));
    op(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  mpfr_t v_;
};

/// Complex value at fixed precision (plain, no error tracking).
struct Complex {
  Real re, im;

  Complex() = default;
  explicit Complex(mpfr_prec_t prec) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  Complex operator-() const { return {-re, -im}; }

  Real abs() const { return (re * re + im * im).sqrt(); }
  Real abs2() const { return re * re + im * im; }
  Complex conj() const { return {re, -im}; }
  /// Principal square root.
  Complex sqrt() const;
};

/// Complex ball: midpoint plus error radius. Radius arithmetic is rounded
/// conservatively so the exact value stays inside through every operation.
class ComplexBall {
 public:
  ComplexBall() = default;
  explicit ComplexBall(mpfr_prec_t prec) : mid_(prec), rad_(kRadPrec) {}
  ComplexBall(Complex mid, Real rad) : mid_(std::move(mid)), rad_(std::move(rad)) {}

  static ComplexBall exact(Complex mid);
  static ComplexBall from_bigint(const BigInt& z, mpfr_prec_t prec);
  static ComplexBall from_parts(const BigInt& re, const BigInt& im, mpfr_prec_t prec);

  const Complex& mid() const { return mid_; }
  const Real& rad() const { return rad_; }
  mpfr_prec_t prec() const { return mid_.prec(); }

  ComplexBall operator+(const ComplexBall& o) const;
  ComplexBall operator-(const ComplexBall& o) const;
  ComplexBall operator*(const ComplexBall& o) const;
  ComplexBall operator/(const ComplexBall& o) const;  // requires o well separated from 0
  ComplexBall operator-() const { return ComplexBall(-mid_, rad_); }
  ComplexBall sqrt() const;  // requires separation from 0
  ComplexBall inv() const;

  Real abs_upper() const { return Real::add_up(mid_.abs(), rad_); }
  Real abs_lower() const;  // max(|mid| - rad, 0), conservatively rounded down
  bool contains_zero() const { return !(abs_lower().sign() > 0); }
  /// True when the two balls cannot overlap.
  bool disjoint_from(const ComplexBall& o) const;

  static constexpr mpfr_prec_t kRadPrec = 48;

 private:
  Complex mid_;
  Real rad_{kRadPrec};
};

/// Horner evaluation of an exact integer-coefficient univariate polynomial.
ComplexBall eval_poly_ball(const std::vector<BigInt>& coeffs, const ComplexBall& x);
Complex eval_poly(const std::vector<Complex>& coeffs, const Complex& x);

}  // namespace ecint
