#include "ecint/oracle.hpp"

#include <stdexcept>

#include "ecint/roots.hpp"

namespace ecint {

OracleCurve OracleCurve::ens_at(const Complex& delta, mpfr_prec_t prec) {
  Complex one(Real::from_long(1, prec), Real(prec));
  Complex lam = (delta + one / delta);
  lam = lam * lam / Complex(Real::from_long(4, prec), Real(prec));
  OracleCurve c;
  c.prec = prec;
  c.a2 = -(lam + one);
  c.a4 = lam;
  c.a6 = Complex(prec);
  return c;
}

namespace {

bool near(const Complex& a, const Complex& b, mpfr_prec_t prec) {
  return !((a - b).abs() > Real::pow2(-static_cast<long>(prec) / 2));
}

}  // namespace

OraclePoint oracle_add(const OracleCurve& c, const OraclePoint& p, const OraclePoint& q) {
  if (p.infinity) return q;
  if (q.infinity) return p;
  const mpfr_prec_t prec = c.prec;
  Complex two(Real::from_long(2, prec), Real(prec));
  Complex three(Real::from_long(3, prec), Real(prec));
  Complex slope(prec);
  if (near(p.x, q.x, prec)) {
    if (near(p.y, -q.y, prec)) return OraclePoint{};  // inverse points
    // doubling
    slope = (three * p.x * p.x + two * c.a2 * p.x + c.a4) / (two * p.y);
  } else {
    slope = (q.y - p.y) / (q.x - p.x);
  }
  OraclePoint r;
  r.infinity = false;
  r.x = slope * slope - c.a2 - p.x - q.x;
  r.y = slope * (p.x - r.x) - p.y;
  return r;
}

std::vector<TorsionPoint> numeric_torsion_oracle(const OracleCurve& curve, unsigned n,
                                                 mpfr_prec_t precision) {
  if (n > 20) throw std::invalid_argument("numeric_torsion_oracle: n capped at 20");
  if (precision < 128) throw std::invalid_argument("numeric_torsion_oracle: precision >= 128");
  if (n == 0) throw std::invalid_argument("numeric_torsion_oracle: n must be >= 1");
  std::vector<TorsionPoint> out;
  if (n == 1) return out;
  const mpfr_prec_t wp = precision + 64;

  // numeric f_k coefficient vectors via the division-polynomial recurrences
  std::vector<std::vector<Complex>> f(n + 3);
  auto cof = [&](long v) { return Complex(Real::from_long(v, wp), Real(wp)); };
  Complex a2 = curve.a2, a4 = curve.a4, a6 = curve.a6;
  Complex b2 = a2 * cof(4), b4 = a4 * cof(2), b6 = a6 * cof(4);
  Complex b8 = a2 * a6 * cof(4) - a4 * a4;
  auto mulp = [&](const std::vector<Complex>& a, const std::vector<Complex>& b) {
    std::vector<Complex> r(a.size() + b.size() - 1, Complex(wp));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    return r;
  };
  auto subp = [&](std::vector<Complex> a, const std::vector<Complex>& b) {
    if (a.size() < b.size()) a.resize(b.size(), Complex(wp));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = a[i] - b[i];
    return a;
  };
  f[0] = {};
  f[1] = {cof(1)};
  f[2] = {cof(1)};
  f[3] = {b8, b6 * cof(3), b4 * cof(3), b2, cof(3)};
  f[4] = {b4 * b8 - b6 * b6, b2 * b8 - b4 * b6, b8 * cof(10), b6 * cof(10), b4 * cof(5), b2, cof(2)};
  std::vector<Complex> q = {a6, a4, a2, cof(1)};
  std::vector<Complex> q16 = mulp(mulp(q, q), {cof(16)});
  for (unsigned k = 5; k <= n + 2 && k >= 5; ++k) {
    if (f[k].size()) continue;
    if (k % 2 == 1) {
      unsigned m = (k - 1) / 2;
      if (m % 2 == 0)
        f[k] = subp(mulp(mulp(f[m + 2], mulp(f[m], mulp(f[m], f[m]))), q16),
                    mulp(f[m - 1], mulp(f[m + 1], mulp(f[m + 1], f[m + 1]))));
      else
        f[k] = subp(mulp(f[m + 2], mulp(f[m], mulp(f[m], f[m]))),
                    mulp(mulp(f[m - 1], mulp(f[m + 1], mulp(f[m + 1], f[m + 1]))), q16));
    } else {
      unsigned m = k / 2;
      f[k] = mulp(f[m], subp(mulp(f[m + 2], mulp(f[m - 1], f[m - 1])),
                             mulp(f[m - 2], mulp(f[m + 1], f[m + 1]))));
    }
  }

  // candidate X values: roots of f_n, plus the 2-torsion cubic when n even
  std::vector<Complex> xs;
  {
    std::vector<Complex> fn = f[n];
    while (!fn.empty() && !(fn.back().abs() > Real::pow2(-static_cast<long>(wp) + 32))) fn.pop_back();
    if (fn.size() >= 2)
      for (auto& r : roots_complex(fn, wp)) xs.push_back(r);
    if (n % 2 == 0)
      for (auto& r : roots_complex(q, wp)) xs.push_back(r);
  }

  // verify each candidate through the group law and find its exact order
  OracleCurve wc = curve;
  wc.prec = wp;
  for (const auto& x0 : xs) {
    Complex y0 = wc.rhs(x0).sqrt();
    OraclePoint P{false, x0, y0};
    OraclePoint acc = P;
    unsigned order = 0;
    for (unsigned k = 2; k <= n; ++k) {
      acc = oracle_add(wc, acc, P);
      if (acc.infinity) {
        order = k;
        break;
      }
    }
    if (order == 0 || n % order != 0) continue;  // not certified as n-torsion
    out.push_back(TorsionPoint{x0, order});
  }
  return out;
}

std::optional<Complex> quartic_x_from_model(const Complex& X, const Complex& delta) {
  mpfr_prec_t p = std::max(X.prec(), delta.prec());
  Complex one(Real::from_long(1, p), Real(p));
  Complex two(Real::from_long(2, p), Real(p));
  Complex d2 = delta * delta;
  Complex den = delta * (two * X - d2 - one);
  if (!(den.abs() > Real::pow2(-static_cast<long>(p) / 2))) return std::nullopt;
  return (two * d2 * X - d2 - one) / den;
}

}  // namespace ecint
