#include "ecint/roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ecint/polyops.hpp"

namespace ecint {

namespace {

std::vector<Complex> derivative_coeffs(const std::vector<Complex>& c, mpfr_prec_t p) {
  std::vector<Complex> d;
  for (std::size_t i = 1; i < c.size(); ++i)
    d.push_back(c[i] * Complex(Real::from_long(static_cast<long>(i), p), Real(p)));
  return d;
}

/// Ehrlich-Aberth sweeps until corrections stall below 2^-target.
std::vector<Complex> aberth(const std::vector<Complex>& coeffs, mpfr_prec_t wp, long target_bits) {
  const std::size_t n = coeffs.size() - 1;
  auto der = derivative_coeffs(coeffs, wp);
  // initial guesses: circle at the Cauchy-style radius with spread angles
  Real maxratio(wp);
  for (std::size_t i = 0; i < n; ++i) {
    Real r = Real::div_up((coeffs[i].abs()), coeffs[n].abs());
    if (maxratio < r) maxratio = r;
  }
  Real radius = Real::from_long(1, wp) + maxratio;
  std::vector<Complex> z(n, Complex(wp));
  // deterministic golden-angle spiral with a mild radius ramp
  for (std::size_t k = 0; k < n; ++k) {
    double frac = std::fmod(0.6180339887498949 * static_cast<double>(k + 1), 1.0);
    double ang = 6.283185307179586 * frac + 0.31;
    double rr = 0.5 + 0.75 * (static_cast<double>(k % 7) + 1) / 7.0;
    z[k] = Complex(Real::from_double(std::cos(ang) * rr, wp), Real::from_double(std::sin(ang) * rr, wp)) *
           Complex(radius, Real(wp));
  }
  const int max_sweeps = 600;
  Real tol = Real::pow2(-target_bits);
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    Real worst(ComplexBall::kRadPrec);
    for (std::size_t i = 0; i < n; ++i) {
      Complex fv = eval_poly(coeffs, z[i]);
      if (fv.is_zero()) continue;
      Complex dv = eval_poly(der, z[i]);
      if (dv.is_zero()) {
        z[i] = z[i] + Complex(Real::pow2(-static_cast<long>(sweep) - 3), Real::pow2(-static_cast<long>(sweep) - 4));
        worst = radius;
        continue;
      }
      Complex newton = fv / dv;
      Complex sum(wp);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        Complex diff = z[i] - z[j];
        if (diff.is_zero()) {
          diff = Complex(Real::pow2(-static_cast<long>(wp) / 2), Real(wp));
        }
        sum = sum + Complex(Real::from_long(1, wp), Real(wp)) / diff;
      }
      Complex denom = Complex(Real::from_long(1, wp), Real(wp)) - newton * sum;
      Complex w = denom.is_zero() ? newton : newton / denom;
      z[i] = z[i] - w;
      Real mag = w.abs();
      if (worst < mag) worst = mag;
    }
    if (!(worst > tol)) break;
  }
  return z;
}

}  // namespace

std::vector<Complex> roots_complex(const std::vector<Complex>& coeffs, mpfr_prec_t precision) {
  if (coeffs.size() < 2) return {};
  mpfr_prec_t wp = precision + 96;
  std::vector<Complex> lifted;
  for (const auto& c : coeffs) {
    Complex x(wp);
    x.re = c.re;
    x.im = c.im;
    lifted.push_back(x);
  }
  auto z = aberth(lifted, wp, precision + 16);
  // Newton polish
  auto der = derivative_coeffs(lifted, wp);
  for (auto& zi : z) {
    for (int it = 0; it < 4; ++it) {
      Complex fv = eval_poly(lifted, zi);
      Complex dv = eval_poly(der, zi);
      if (dv.is_zero()) break;
      zi = zi - fv / dv;
    }
  }
  std::sort(z.begin(), z.end(), [](const Complex& a, const Complex& b) {
    if (a.re < b.re) return true;
    if (b.re < a.re) return false;
    return a.im < b.im;
  });
  return z;
}

std::vector<ComplexBall> roots_univariate(const MPoly& f, mpfr_prec_t precision) {
  if (f.is_zero()) throw std::invalid_argument("roots_univariate: zero polynomial");
  auto eff = f.effective_vars();
  if (eff.size() != 1) throw std::invalid_argument("roots_univariate: polynomial must be univariate");
  if (precision < 128) throw std::invalid_argument("roots_univariate: precision must be >= 128");
  const std::string var = eff[0];
  const uint32_t n = f.degree_or_zero(var);
  if (n > 300) throw std::invalid_argument("roots_univariate: degree cap is 300");
  if (!gcd_poly(f, f.derivative(var)).is_constant())
    throw std::invalid_argument("roots_univariate: input must be squarefree");
  auto coeffs = f.dense_univariate(var);

  for (int attempt = 0; attempt < 4; ++attempt) {
    mpfr_prec_t wp = (precision + 64) << attempt;
    std::vector<Complex> cc;
    for (const auto& c : coeffs) cc.push_back(Complex(Real::from_bigint(c, wp), Real(wp)));
    auto z = aberth(cc, wp, precision + 32);
    auto der = derivative_coeffs(cc, wp);
    for (auto& zi : z)
      for (int it = 0; it < 6; ++it) {
        Complex fv = eval_poly(cc, zi);
        Complex dv = eval_poly(der, zi);
        if (dv.is_zero()) break;
        zi = zi - fv / dv;
      }
    // certify: disk of radius n*|f(z)|/|f'(z)| contains a root; disjoint
    // disks for all n approximations isolate every root.
    std::vector<ComplexBall> balls;
    bool ok = true;
    MPoly fder = f.derivative(var);
    auto dcoeffs = fder.dense_univariate(var);
    for (const auto& zi : z) {
      ComplexBall zb = ComplexBall::exact(zi);
      ComplexBall fv = eval_poly_ball(coeffs, zb);
      ComplexBall dv = eval_poly_ball(dcoeffs, zb);
      Real dlow = dv.abs_lower();
      if (!(dlow.sign() > 0)) {
        ok = false;
        break;
      }
      Real rad = Real::div_up(Real::mul_up(Real::from_long(n, ComplexBall::kRadPrec), fv.abs_upper()), dlow);
      balls.emplace_back(zi, rad);
    }
    if (ok) {
      for (std::size_t i = 0; i + 1 < balls.size() && ok; ++i)
        for (std::size_t j = i + 1; j < balls.size() && ok; ++j)
          if (!balls[i].disjoint_from(balls[j])) ok = false;
    }
    if (ok) {
      std::sort(balls.begin(), balls.end(), [](const ComplexBall& a, const ComplexBall& b) {
        if (a.mid().re < b.mid().re) return true;
        if (b.mid().re < a.mid().re) return false;
        return a.mid().im < b.mid().im;
      });
      return balls;
    }
  }
  throw std::runtime_error("roots_univariate: failed to isolate roots after precision escalation");
}

}  // namespace ecint
