#include "ecint/intersect.hpp"

#include <algorithm>
#include <stdexcept>

#include "ecint/curves.hpp"
#include "ecint/polyops.hpp"

namespace ecint {

ReductionPair reduce_fp_mod_f3(unsigned p, int workers) {
  (void)workers;
  if (p < 5) throw std::invalid_argument("reduce_fp_mod_f3: p = 3 is degenerate; need p >= 5");
  MPoly Fp = QuarticModel::modified_division_poly(p);
  MPoly F3 = QuarticModel::modified_division_poly(3);
  // rename: F_p in (v, delta), F_3 in (u, delta)
  MPoly Fpv = Fp.substitute("x", MPoly::variable("v"));
  MPoly F3u = F3.substitute("x", MPoly::variable("u"));
  auto pd = pseudo_divrem(Fpv, F3u, "delta");
  if (pd.remainder.degree_or_zero("delta") >= 2)
    throw std::logic_error("reduce_fp_mod_f3: remainder degree >= 2 in delta");
  ReductionPair out;
  out.p = p;
  out.scale_power = pd.scale_power;
  MPoly r0 = pd.remainder.coeff_of("delta", 0);
  MPoly r1 = pd.remainder.coeff_of("delta", 1);
  auto strip_monomial = [](MPoly& f, const std::string& var) -> unsigned {
    if (f.is_zero()) return 0;
    std::size_t vi = SIZE_MAX;
    for (std::size_t i = 0; i < f.vars().size(); ++i)
      if (f.vars()[i] == var) vi = i;
    if (vi == SIZE_MAX) return 0;
    uint32_t mn = UINT32_MAX;
    for (const auto& t : f.terms()) mn = std::min(mn, t.e[vi]);
    if (mn == 0 || mn == UINT32_MAX) return 0;
    f = *f.divide_exact(MPoly::variable(var, mn));
    return mn;
  };
  auto n0 = r0.content_primitive();
  auto n1 = r1.content_primitive();
  out.c0 = n0.primitive;
  out.c1 = n1.primitive;
  out.mono_u0 = strip_monomial(out.c0, "u");
  out.mono_v0 = strip_monomial(out.c0, "v");
  out.mono_u1 = strip_monomial(out.c1, "u");
  out.mono_v1 = strip_monomial(out.c1, "v");
  out.raw_content0 = n0.content;
  out.raw_content1 = n1.content;
  out.raw_sign0 = n0.sign;
  out.raw_sign1 = n1.sign;
  return out;
}

namespace {

/// C(u, v) = u^k * ct(u^4, v/u): every term u^a v^b maps to s^((a+b-k)/4) w^b,
/// which requires all total degrees a+b congruent mod 4 and >= k.
MPoly compress_one(const MPoly& c, unsigned& k_out) {
  if (c.is_zero()) {
    k_out = 0;
    return MPoly();
  }
  std::size_t iu = SIZE_MAX, iv = SIZE_MAX;
  const auto& vars = c.vars();
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i] == "u") iu = i;
    if (vars[i] == "v") iv = i;
  }
  uint32_t mindeg = UINT32_MAX, residue = UINT32_MAX;
  for (const auto& t : c.terms()) {
    uint32_t a = iu == SIZE_MAX ? 0 : t.e[iu];
    uint32_t b = iv == SIZE_MAX ? 0 : t.e[iv];
    uint32_t tot = a + b;
    mindeg = std::min(mindeg, tot);
    if (residue == UINT32_MAX) residue = tot % 4;
    if (tot % 4 != residue)
      throw std::runtime_error(
          "compress: exponent pattern violates the u^4, v/u shape at term with u^" +
          std::to_string(a) + " v^" + std::to_string(b));
  }
  k_out = mindeg;
  std::vector<MPoly::Term> terms;
  for (const auto& t : c.terms()) {
    uint32_t a = iu == SIZE_MAX ? 0 : t.e[iu];
    uint32_t b = iv == SIZE_MAX ? 0 : t.e[iv];
    MPoly::Term nt;
    nt.e[0] = (a + b - mindeg) / 4;  // s exponent
    nt.e[1] = b;                     // w exponent
    nt.c = t.c;
    terms.push_back(std::move(nt));
  }
  return MPoly::from_terms({"s", "w"}, std::move(terms));
}

}  // namespace

CompressedPair compress(const ReductionPair& pair) {
  CompressedPair out;
  out.p = pair.p;
  out.ct0 = compress_one(pair.c0, out.k0);
  out.ct1 = compress_one(pair.c1, out.k1);
  return out;
}

MPoly decompress(const MPoly& ct, unsigned k, unsigned) {
  std::size_t is = SIZE_MAX, iw = SIZE_MAX;
  const auto& vars = ct.vars();
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i] == "s") is = i;
    if (vars[i] == "w") iw = i;
  }
  std::vector<MPoly::Term> terms;
  for (const auto& t : ct.terms()) {
    uint32_t a = is == SIZE_MAX ? 0 : t.e[is];
    uint32_t b = iw == SIZE_MAX ? 0 : t.e[iw];
    // s^a w^b -> u^(4a - b + k) v^b
    if (4 * a + k < b) throw std::logic_error("decompress: negative u exponent");
    MPoly::Term nt;
    nt.e[0] = 4 * a + k - b;
    nt.e[1] = b;
    nt.c = t.c;
    terms.push_back(std::move(nt));
  }
  return MPoly::from_terms({"u", "v"}, std::move(terms));
}

MPoly ResultantProfile::reexpand() const {
  MPoly out = MPoly::constant(content);
  out = out * MPoly::variable(kept, monomial_power);
  if (cyclotomic_power > 0) {
    MPoly cyc = cyclotomic_kind == "sm1"
                    ? MPoly::variable(kept) - MPoly::constant(1)
                    : MPoly::variable(kept, 4) - MPoly::constant(1);
    out = out * cyc.pow(cyclotomic_power);
  }
  for (const auto& part : parts) out = out * part.factor.pow(part.multiplicity);
  return out;
}

std::pair<unsigned, unsigned> coordinate_counts(const ResultantProfile& u_side,
                                                const ResultantProfile& v_side) {
  unsigned uc = 0, vc = 0;
  for (const auto& part : u_side.parts) uc += part.degree;
  for (const auto& part : v_side.parts) vc += part.degree;
  return {uc, vc};
}

IntersectionBound pigeonhole_bound(unsigned u_count, unsigned v_count) {
  if (u_count == 0 || v_count == 0)
    throw std::invalid_argument("pigeonhole_bound: counts must be positive");
  IntersectionBound b;
  b.u_count = u_count;
  b.v_count = v_count;
  b.multiplicity = (v_count + u_count - 1) / u_count;
  b.cardinality = 6 + 4 + 4 * b.multiplicity;
  return b;
}

std::pair<ComplexBall, ComplexBall> delta_pair_from_u(const ComplexBall& u) {
  const mpfr_prec_t p = u.prec();
  auto cb = [&](long v) { return ComplexBall::from_bigint(BigInt(v), p); };
  ComplexBall u2 = u * u;
  ComplexBall u3 = u2 * u;
  ComplexBall u4 = u2 * u2;
  if (u.contains_zero()) throw std::domain_error("delta_pair_from_u: u^4 = 0 not excluded");
  if ((u4 - cb(1)).contains_zero())
    throw std::domain_error("delta_pair_from_u: u^4 = 1 not excluded");
  ComplexBall disc = u4 * u4 + u4 * cb(14) + cb(1);
  if (disc.contains_zero())
    throw std::domain_error("delta_pair_from_u: u^8 + 14u^4 + 1 = 0 not excluded");
  ComplexBall root = disc.sqrt();
  ComplexBall denom = u3 * cb(4);
  ComplexBall b = (cb(1) - u4);  // -(u^4 - 1)
  ComplexBall d1 = (b + root) / denom;
  ComplexBall d2 = (b - root) / denom;
  // deterministic order by midpoint
  auto less = [](const ComplexBall& a, const ComplexBall& c) {
    if (a.mid().re < c.mid().re) return true;
    if (c.mid().re < a.mid().re) return false;
    return a.mid().im < c.mid().im;
  };
  if (less(d2, d1)) std::swap(d1, d2);
  return {d1, d2};
}

}  // namespace ecint
