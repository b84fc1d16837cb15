#include "ecint/polyops.hpp"

#include <algorithm>
#include <stdexcept>

namespace ecint {

PseudoDivRem pseudo_divrem(const MPoly& f, const MPoly& g, const std::string& var) {
  if (g.is_zero()) throw std::invalid_argument("pseudo_divrem: zero divisor");
  uint32_t dg = g.degree_or_zero(var);
  if (dg == 0) throw std::invalid_argument("pseudo_divrem: divisor has degree 0 in " + var);
  auto gc = g.univariate_coeffs(var);
  const MPoly& glc = gc[dg];
  PseudoDivRem out;
  out.remainder = f;
  out.scale_power = 0;
  std::vector<MPoly> q;  // coefficients of the quotient in var
  uint32_t df = f.degree_or_zero(var);
  if (!f.is_zero() && df >= dg) q.assign(df - dg + 1, MPoly());
  while (!out.remainder.is_zero()) {
    uint32_t dr = out.remainder.degree_or_zero(var);
    if (dr < dg) break;
    auto rc = out.remainder.univariate_coeffs(var);
    const MPoly& rlc = rc[dr];
    // r := glc*r - rlc*var^(dr-dg)*g ; q := glc*q + rlc*var^(dr-dg)
    for (auto& qi : q) qi = qi * glc;
    q[dr - dg] = q[dr - dg] + rlc;
    MPoly shift = MPoly::variable(var, dr - dg);
    out.remainder = out.remainder * glc - rlc * shift * g;
    ++out.scale_power;
  }
  out.quotient = MPoly::from_univariate_coeffs(var, q);
  return out;
}

MPoly primitive_positive(const MPoly& f) { return f.content_primitive().primitive; }

namespace {

/// Modular gcd of primitive univariate integer polynomials (Brown).
MPoly gcd_univariate_modular(const MPoly& f, const MPoly& g, const std::string& var) {
  auto fv = f.dense_univariate(var);
  auto gv = g.dense_univariate(var);
  BigInt lcf = fv.back(), lcg = gv.back();
  BigInt gamma = bigint_gcd(lcf, lcg);
  int best_deg = -1;
  CrtAccum crt;
  BigInt prev_candidate = -1;
  std::size_t prime_idx = 0;
  auto primes = modular_primes(64);
  while (true) {
    if (prime_idx >= primes.size()) primes = modular_primes(primes.size() * 2);
    uint64_t p = primes[prime_idx++];
    if (mod_u64(lcf, p) == 0 || mod_u64(lcg, p) == 0) continue;
    FpCtx F(p);
    FpVec fp(fv.size()), gp(gv.size());
    for (std::size_t i = 0; i < fv.size(); ++i) fp[i] = F.to_m(mod_u64(fv[i], p));
    for (std::size_t i = 0; i < gv.size(); ++i) gp[i] = F.to_m(mod_u64(gv[i], p));
    FpVec h = fp_gcd_monic(F, fp, gp);
    int d = fp_deg(h);
    if (d == 0) return MPoly::constant(1);
    if (best_deg != -1 && d > best_deg) continue;  // unlucky prime
    if (best_deg == -1 || d < best_deg) {
      best_deg = d;
      crt.init(d + 1);
      prev_candidate = -1;
    }
    // scale to leading coefficient gamma mod p
    h = fp_scale(F, h, F.to_m(mod_u64(gamma, p)));
    std::vector<uint64_t> vals(d + 1);
    for (int i = 0; i <= d; ++i) vals[i] = F.from_m(h[i]);
    crt.add_prime(p, vals);
    // stabilization check
    BigInt probe = 0;
    for (int i = 0; i <= d; ++i) probe = probe * 1000003 + crt.symmetric(i);
    if (probe == prev_candidate) {
      std::vector<BigInt> hv(d + 1);
      for (int i = 0; i <= d; ++i) hv[i] = crt.symmetric(i);
      MPoly cand = MPoly::from_dense_univariate(var, hv).primitive_part();
      if (f.divide_exact(cand) && g.divide_exact(cand)) return cand;
    }
    prev_candidate = probe;
  }
}

MPoly gcd_recursive(MPoly f, MPoly g);

/// Content of f with respect to var: gcd of the coefficient polynomials.
MPoly content_in_var(const MPoly& f, const std::string& var) {
  auto coeffs = f.univariate_coeffs(var);
  MPoly c;
  for (const auto& ci : coeffs) {
    if (ci.is_zero()) continue;
    c = c.is_zero() ? ci.content_primitive().primitive * ci.content() : gcd_recursive(c, ci);
    if (c.is_constant() && ci.content() == 1) break;
  }
  return c;
}

MPoly gcd_recursive(MPoly f, MPoly g) {
  if (f.is_zero()) return primitive_positive(g);
  if (g.is_zero()) return primitive_positive(f);
  auto efff = f.effective_vars();
  auto effg = g.effective_vars();
  if (efff.empty() || effg.empty()) {
    // one side constant
    BigInt c = bigint_gcd(f.is_constant() ? f.constant_value() : f.content(),
                          g.is_constant() ? g.constant_value() : g.content());
    return MPoly::constant(c);
  }
  if (efff.size() == 1 && effg.size() == 1 && efff[0] == effg[0]) {
    auto cf = f.content_primitive();
    auto cg = g.content_primitive();
    BigInt cc = bigint_gcd(cf.content, cg.content);
    MPoly h = gcd_univariate_modular(cf.primitive, cg.primitive, efff[0]);
    return h * cc;
  }
  // multivariate: primitive PRS over the highest-priority shared variable
  std::string var;
  for (const auto& v : efff)
    if (std::find(effg.begin(), effg.end(), v) != effg.end()) {
      var = v;
      break;
    }
  if (var.empty()) {
    // disjoint variable sets: gcd of contents only
    MPoly cf = content_in_var(f, efff[0]);
    MPoly cg = content_in_var(g, effg[0]);
    for (std::size_t i = 1; i < efff.size(); ++i) cf = content_in_var(cf, efff[i]);
    for (std::size_t i = 1; i < effg.size(); ++i) cg = content_in_var(cg, effg[i]);
    return gcd_recursive(cf, cg);
  }
  MPoly contf = content_in_var(f, var);
  MPoly contg = content_in_var(g, var);
  MPoly ppf = *f.divide_exact(contf);
  MPoly ppg = *g.divide_exact(contg);
  MPoly cont_gcd = gcd_recursive(contf, contg);
  // subresultant PRS on the primitive parts
  MPoly a = ppf, b = ppg;
  if (a.degree_or_zero(var) < b.degree_or_zero(var)) std::swap(a, b);
  while (!b.is_zero() && b.degree_or_zero(var) > 0) {
    MPoly r = pseudo_divrem(a, b, var).remainder;
    a = std::move(b);
    b = r.is_zero() ? r : *r.divide_exact(content_in_var(r, var)) ;
  }
  MPoly result;
  if (b.is_zero())
    result = *a.divide_exact(content_in_var(a, var));
  else
    result = MPoly::constant(1);  // gcd free of var
  return primitive_positive(result * cont_gcd);
}

}  // namespace

MPoly gcd_poly(const MPoly& f, const MPoly& g) { return gcd_recursive(f, g); }

MPoly SquarefreeDecomposition::reexpand() const {
  MPoly out = MPoly::constant(content * unit_sign);
  for (const auto& [fac, mult] : factors) out = out * fac.pow(mult);
  return out;
}

SquarefreeDecomposition squarefree_decompose(const MPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree_decompose: zero polynomial");
  auto eff = f.effective_vars();
  if (eff.size() > 1)
    throw std::invalid_argument("squarefree_decompose: input must be univariate");
  SquarefreeDecomposition out;
  auto cp = f.content_primitive();
  out.unit_sign = cp.sign;
  out.content = cp.content;
  if (eff.empty()) return out;  // constant
  const std::string var = eff[0];
  MPoly fp = cp.primitive;
  MPoly fprime = fp.derivative(var);
  MPoly g = gcd_poly(fp, fprime);
  MPoly c = *fp.divide_exact(g);
  MPoly d = *fprime.divide_exact(g) - c.derivative(var);
  unsigned i = 1;
  while (!(c.is_constant())) {
    MPoly a = gcd_poly(c, d);
    if (a.degree_or_zero(var) > 0) out.factors.emplace_back(a, i);
    c = *c.divide_exact(a);
    d = *d.divide_exact(a) - c.derivative(var);
    ++i;
  }
  // leftover unit from primitive-part sign conventions inside the loop
  MPoly check = out.reexpand();
  if (check != f) {
    // signs of factors are normalized positive; fold any residual unit into content/sign
    MPoly neg = MPoly::constant(-1) * check;
    if (neg == f)
      out.unit_sign = -out.unit_sign;
    else
      throw std::logic_error("squarefree_decompose: re-expansion mismatch");
  }
  return out;
}

EvalModResult eval_mod(const MPoly& f, const std::map<std::string, uint64_t>& assignments,
                       uint64_t prime) {
  FpCtx F(prime);
  std::vector<std::string> free_vars;
  for (const auto& v : f.effective_vars())
    if (assignments.find(v) == assignments.end()) free_vars.push_back(v);
  if (free_vars.size() > 1)
    throw std::invalid_argument("eval_mod: more than one unassigned variable");
  EvalModResult out;
  if (free_vars.empty()) {
    uint64_t acc = 0;
    for (const auto& t : f.terms()) {
      uint64_t v = F.to_m(mod_u64(t.c, prime));
      for (std::size_t i = 0; i < f.vars().size(); ++i) {
        if (t.e[i] == 0) continue;
        auto it = assignments.find(f.vars()[i]);
        uint64_t base = F.to_m(it == assignments.end() ? 0 : it->second % prime);
        v = F.mul(v, F.pow(base, t.e[i]));
      }
      acc = F.add(acc, v);
    }
    out.is_residue = true;
    out.residue = F.from_m(acc);
    return out;
  }
  out.is_residue = false;
  out.var = free_vars[0];
  auto coeffs = f.univariate_coeffs(out.var);
  out.image.assign(coeffs.size(), 0);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    auto sub = eval_mod(coeffs[k], assignments, prime);
    out.image[k] = sub.residue;
  }
  while (!out.image.empty() && out.image.back() == 0) out.image.pop_back();
  return out;
}

}  // namespace ecint
