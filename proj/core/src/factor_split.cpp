#include "ecint/factor_split.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

#include "ecint/modular.hpp"
#include "ecint/polyops.hpp"

namespace ecint {

namespace {

// ---------- arithmetic mod m (m = p^k), dense vectors of canonical residues

using ZmVec = std::vector<BigInt>;

BigInt zm_red(const BigInt& x, const BigInt& m) {
  BigInt r = x % m;
  if (r < 0) r += m;
  return r;
}

void zm_trim(ZmVec& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

ZmVec zm_mul(const ZmVec& a, const ZmVec& b, const BigInt& m) {
  if (a.empty() || b.empty()) return {};
  ZmVec r(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  for (auto& c : r) c = zm_red(c, m);
  zm_trim(r);
  return r;
}

ZmVec zm_sub(const ZmVec& a, const ZmVec& b, const BigInt& m) {
  ZmVec r(std::max(a.size(), b.size()), BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = zm_red(r[i] - b[i], m);
  zm_trim(r);
  return r;
}

ZmVec zm_add(const ZmVec& a, const ZmVec& b, const BigInt& m) {
  ZmVec r(std::max(a.size(), b.size()), BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = zm_red(r[i] + b[i], m);
  zm_trim(r);
  return r;
}

/// divrem by a monic divisor.
void zm_divrem_monic(const ZmVec& a, const ZmVec& b, const BigInt& m, ZmVec& q, ZmVec& r) {
  if (b.empty() || b.back() != 1) throw std::logic_error("zm_divrem_monic: divisor not monic");
  r = a;
  zm_trim(r);
  q.clear();
  if (r.size() < b.size()) return;
  q.assign(r.size() - b.size() + 1, BigInt(0));
  const int db = static_cast<int>(b.size()) - 1;
  for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
    if (r[i] == 0) continue;
    BigInt c = r[i];
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) r[i - db + j] = zm_red(r[i - db + j] - c * b[j], m);
  }
  zm_trim(q);
  zm_trim(r);
}

ZmVec zm_mod_monic(const ZmVec& a, const ZmVec& b, const BigInt& m) {
  ZmVec q, r;
  zm_divrem_monic(a, b, m, q, r);
  return r;
}

// ---------- Hensel lifting (quadratic two-factor step, recursive tree)

/// One quadratic step: given f = g*h (mod m), s*g + t*h = 1 (mod m), h monic,
/// produce the same data mod m^2. f is the exact integer target.
void hensel_step(const ZmVec& f, ZmVec& g, ZmVec& h, ZmVec& s, ZmVec& t, const BigInt& m) {
  BigInt m2 = m * m;
  auto red2 = [&](ZmVec v) {
    for (auto& c : v) c = zm_red(c, m2);
    zm_trim(v);
    return v;
  };
  ZmVec fg = red2(f);
  ZmVec e = zm_sub(fg, zm_mul(g, h, m2), m2);
  // dh = (s*e) mod h ; dg = (e - g*dh) / h  (exact, h monic)
  ZmVec se = zm_mul(s, e, m2);
  ZmVec dh = zm_mod_monic(se, h, m2);
  ZmVec num = zm_sub(e, zm_mul(g, dh, m2), m2);
  ZmVec dg, rem;
  zm_divrem_monic(num, h, m2, dg, rem);
  if (!rem.empty()) throw std::logic_error("hensel_step: inexact correction");
  g = zm_add(g, dg, m2);
  h = zm_add(h, dh, m2);
  // refresh the Bezout pair: b = s*g + t*h - 1 (mod m^2)
  ZmVec b = zm_sub(zm_add(zm_mul(s, g, m2), zm_mul(t, h, m2), m2), ZmVec{BigInt(1)}, m2);
  ZmVec sb = zm_mul(s, b, m2);
  ZmVec ds = zm_mod_monic(sb, h, m2);
  ZmVec numt = zm_sub(b, zm_mul(g, ds, m2), m2);
  ZmVec dt, rem2;
  zm_divrem_monic(numt, h, m2, dt, rem2);
  if (!rem2.empty()) throw std::logic_error("hensel_step: inexact Bezout correction");
  s = zm_sub(s, ds, m2);
  t = zm_sub(t, dt, m2);
}

/// Extended Euclid over F_p for the initial Bezout pair, returned as ZmVec.
void fp_bezout(const FpCtx& F, const FpVec& g, const FpVec& h, ZmVec& s_out, ZmVec& t_out) {
  FpVec r0 = g, r1 = h;
  FpVec s0 = {F.one}, s1 = {};
  FpVec t0 = {}, t1 = {F.one};
  while (!r1.empty()) {
    FpVec q, r;
    fp_divrem(F, r0, r1, q, r);
    FpVec s2 = fp_sub(F, s0, fp_mul(F, q, s1));
    FpVec t2 = fp_sub(F, t0, fp_mul(F, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (fp_deg(r0) != 0) throw std::logic_error("fp_bezout: inputs not coprime");
  uint64_t inv = F.inv(r0[0]);
  auto emit = [&](const FpVec& v) {
    ZmVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
      out[i] = BigInt(static_cast<unsigned long>(F.from_m(F.mul(v[i], inv))));
    return out;
  };
  s_out = emit(s0);
  t_out = emit(t0);
}

/// Lift the factorization target = prod(factors) (mod p), all factors monic
/// and pairwise coprime mod p, to mod `mfinal` (a power of p). `target` must
/// be monic mod mfinal as well (callers pre-multiply by lc^{-1} mod mfinal).
void hensel_tree(const ZmVec& target, std::vector<ZmVec>& factors, std::size_t lo, std::size_t hi,
                 uint64_t p, const BigInt& mfinal) {
  if (hi - lo == 1) {
    factors[lo] = target;
    return;
  }
  std::size_t mid = lo + (hi - lo) / 2;
  FpCtx F(p);
  auto to_fp = [&](const ZmVec& v) {
    FpVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = F.to_m(mod_u64(v[i], p));
    fp_trim(out);
    return out;
  };
  // products mod p
  FpVec gp = {F.one}, hp = {F.one};
  for (std::size_t i = lo; i < mid; ++i) gp = fp_mul(F, gp, to_fp(factors[i]));
  for (std::size_t i = mid; i < hi; ++i) hp = fp_mul(F, hp, to_fp(factors[i]));
  ZmVec s, t;
  fp_bezout(F, gp, hp, s, t);
  auto from_fp = [&](const FpVec& v) {
    ZmVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
      out[i] = BigInt(static_cast<unsigned long>(F.from_m(v[i])));
    return out;
  };
  ZmVec g = from_fp(gp), h = from_fp(hp);
  BigInt m = static_cast<unsigned long>(p);
  while (m < mfinal) {
    hensel_step(target, g, h, s, t, m);
    m = m * m;
  }
  auto redf = [&](ZmVec v) {
    for (auto& c : v) c = zm_red(c, mfinal);
    zm_trim(v);
    return v;
  };
  g = redf(g);
  h = redf(h);
  hensel_tree(g, factors, lo, mid, p, mfinal);
  hensel_tree(h, factors, mid, hi, p, mfinal);
}

// ---------- factorization mod p (bounded distinct-degree + equal-degree)

struct ModFactorization {
  uint64_t p = 0;
  std::vector<std::pair<FpVec, unsigned>> small;  // monic irreducible, its degree
  FpVec big_rest;                                 // monic product of factors above the bound
  bool usable = false;
};

void edf(const FpCtx& F, const FpVec& f, unsigned d, std::mt19937_64& rng,
         std::vector<FpVec>& out) {
  if (static_cast<unsigned>(fp_deg(f)) == d) {
    out.push_back(fp_make_monic(F, f));
    return;
  }
  BigInt e = (bigint_pow(BigInt(static_cast<unsigned long>(F.p)), d) - 1) / 2;
  while (true) {
    FpVec a(fp_deg(f), 0);
    for (auto& c : a) c = F.to_m(rng() % F.p);
    fp_trim(a);
    if (a.empty()) continue;
    FpVec b = fp_powmod(F, a, e, f);
    if (b.empty()) continue;
    b[0] = F.sub(b[0], F.one);
    fp_trim(b);
    FpVec g = fp_gcd_monic(F, b, f);
    int dg = fp_deg(g);
    if (dg > 0 && dg < fp_deg(f)) {
      FpVec q, r;
      fp_divrem(F, f, g, q, r);
      edf(F, g, d, rng, out);
      edf(F, fp_make_monic(F, q), d, rng, out);
      return;
    }
  }
}

ModFactorization factor_mod_p(const std::vector<BigInt>& coeffs, uint64_t p, unsigned bound) {
  ModFactorization out;
  out.p = p;
  FpCtx F(p);
  FpVec f(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) f[i] = F.to_m(mod_u64(coeffs[i], p));
  fp_trim(f);
  if (static_cast<int>(f.size()) != static_cast<int>(coeffs.size())) return out;  // lc died
  // must stay squarefree mod p
  FpVec der = fp_derivative(F, f);
  if (der.empty()) return out;
  if (fp_deg(fp_gcd_monic(F, f, der)) != 0) return out;
  f = fp_make_monic(F, f);
  std::mt19937_64 rng(p ^ 0x9e3779b97f4a7c15ULL);
  FpVec x = {0, F.one};
  FpVec h = x;  // x^(p^i) mod f
  FpVec rest = f;
  for (unsigned d = 1; d <= bound && fp_deg(rest) > 0; ++d) {
    if (2 * d > static_cast<unsigned>(fp_deg(rest))) break;  // remainder irreducible
    h = fp_powmod(F, h, BigInt(static_cast<unsigned long>(p)), rest);
    FpVec hx = h;
    if (hx.size() < 2) hx.resize(2, 0);
    hx[1] = F.sub(hx[1], F.one);
    fp_trim(hx);
    FpVec g = fp_gcd_monic(F, hx, rest);
    if (fp_deg(g) > 0) {
      std::vector<FpVec> irr;
      edf(F, g, d, rng, irr);
      for (auto& u : irr) out.small.emplace_back(std::move(u), d);
      FpVec q, r;
      fp_divrem(F, rest, g, q, r);
      rest = fp_make_monic(F, q);
      h = fp_mod(F, h, rest);
    }
  }
  if (fp_deg(rest) > 0) {
    if (static_cast<unsigned>(fp_deg(rest)) <= bound)
      out.small.emplace_back(rest, static_cast<unsigned>(fp_deg(rest)));
    else
      out.big_rest = rest;
  }
  out.usable = true;
  return out;
}

BigInt landau_mignotte_modulus_bits(const std::vector<BigInt>& coeffs, unsigned bound) {
  BigInt norm2 = 0;
  for (const auto& c : coeffs) norm2 += c * c;
  std::size_t bits = bound + (bit_length(norm2) + 1) / 2 + bit_length(coeffs.back()) + 8;
  return static_cast<unsigned long>(bits);
}

}  // namespace

SmallFactorSplit split_small_factors(const MPoly& f_in, const std::string& var,
                                     const SplitBudget& budget) {
  SmallFactorSplit out;
  MPoly f = f_in.primitive_part();
  auto eff = f.effective_vars();
  if (eff.size() != 1 || eff[0] != var)
    throw std::invalid_argument("split_small_factors: input must be univariate in " + var);
  unsigned bound = std::min<unsigned>(budget.max_factor_degree, f.degree_or_zero(var) - 1);
  if (f.degree_or_zero(var) <= 1 || bound == 0) {
    out.cofactor = f;
    return out;
  }

  while (true) {
    auto coeffs = f.dense_univariate(var);
    unsigned n = static_cast<unsigned>(coeffs.size()) - 1;
    if (n <= 1 || bound == 0) break;
    // audition primes, keep the factorization with the fewest small factors
    ModFactorization best;
    std::size_t best_score = SIZE_MAX;
    auto cands = small_primes(64, 1000 + (n % 37) * 8);
    int tried = 0;
    for (uint64_t p : cands) {
      if (tried >= budget.prime_candidates) break;
      if (mod_u64(coeffs.back(), p) == 0) continue;
      ModFactorization m = factor_mod_p(coeffs, p, std::min(bound, n - 1));
      if (!m.usable) continue;
      ++tried;
      if (m.small.size() < best_score) {
        best_score = m.small.size();
        best = std::move(m);
      }
      if (best_score <= 2) break;
    }
    if (best_score == SIZE_MAX || best.small.empty()) break;  // nothing small to find

    // Hensel-lift all modular factors (small ones + big rest) as monic polys
    const uint64_t p = best.p;
    BigInt mfinal = BigInt(static_cast<unsigned long>(p));
    {
      BigInt want_bits = landau_mignotte_modulus_bits(coeffs, std::min(bound, n - 1));
      while (BigInt(static_cast<long>(bit_length(mfinal))) < want_bits) mfinal = mfinal * mfinal;
    }
    FpCtx F(p);
    std::vector<ZmVec> lifted;
    std::vector<unsigned> degs;
    for (auto& [u, d] : best.small) {
      ZmVec v(u.size());
      for (std::size_t i = 0; i < u.size(); ++i)
        v[i] = BigInt(static_cast<unsigned long>(F.from_m(u[i])));
      lifted.push_back(std::move(v));
      degs.push_back(d);
    }
    bool has_rest = !best.big_rest.empty() && fp_deg(best.big_rest) > 0;
    if (has_rest) {
      ZmVec v(best.big_rest.size());
      for (std::size_t i = 0; i < best.big_rest.size(); ++i)
        v[i] = BigInt(static_cast<unsigned long>(F.from_m(best.big_rest[i])));
      lifted.push_back(std::move(v));
    }
    // monic target: f / lc mod mfinal
    ZmVec target(coeffs.size());
    {
      BigInt lcinv;
      BigInt lcm = zm_red(coeffs.back(), mfinal);
      if (mpz_invert(lcinv.get_mpz_t(), lcm.get_mpz_t(), mfinal.get_mpz_t()) == 0)
        throw std::logic_error("split_small_factors: lc not invertible");
      for (std::size_t i = 0; i < coeffs.size(); ++i)
        target[i] = zm_red(coeffs[i] * lcinv, mfinal);
    }
    hensel_tree(target, lifted, 0, lifted.size(), p, mfinal);
    std::size_t nsmall = degs.size();

    // bounded recombination over the small lifted factors
    const BigInt& lc = coeffs.back();
    std::vector<int> alive(nsmall, 1);
    bool found_any = false;
    std::size_t tries = 0;
    auto try_subset = [&](const std::vector<std::size_t>& idx) -> bool {
      unsigned dsum = 0;
      for (auto i : idx) dsum += degs[i];
      if (dsum > bound) return false;
      if (++tries > budget.max_subsets) return false;
      ZmVec prod{zm_red(lc, mfinal)};
      for (auto i : idx) prod = zm_mul(prod, lifted[i], mfinal);
      // symmetric lift -> primitive part -> trial division
      std::vector<BigInt> sym(prod.size());
      for (std::size_t i = 0; i < prod.size(); ++i) {
        sym[i] = prod[i];
        if (sym[i] * 2 > mfinal) sym[i] -= mfinal;
      }
      MPoly cand = MPoly::from_dense_univariate(var, sym).primitive_part();
      if (cand.degree_or_zero(var) == 0) return false;
      auto q = f.divide_exact(cand);
      if (!q) return false;
      out.factors.push_back(cand);
      f = *q;
      found_any = true;
      for (auto i : idx) alive[i] = 0;
      return true;
    };
    // enumerate by cardinality
    bool progressed = false;
    for (std::size_t card = 1; card <= nsmall && !progressed; ++card) {
      std::vector<std::size_t> idx;
      std::function<bool(std::size_t)> rec = [&](std::size_t start) -> bool {
        if (idx.size() == card) return try_subset(idx);
        for (std::size_t i = start; i < nsmall; ++i) {
          if (!alive[i]) continue;
          unsigned dsum = degs[i];
          for (auto j : idx) dsum += degs[j];
          if (dsum > bound) continue;
          idx.push_back(i);
          if (rec(i + 1)) {
            idx.pop_back();
            return true;
          }
          idx.pop_back();
          if (tries > budget.max_subsets) return false;
        }
        return false;
      };
      if (rec(0)) progressed = true;
      if (tries > budget.max_subsets) {
        out.complete = false;
        break;
      }
    }
    if (!progressed || !found_any) break;  // no more small factors reachable
    // loop again on the reduced f (fresh factorization keeps things simple)
  }

  out.cofactor = f;
  std::sort(out.factors.begin(), out.factors.end(), MPoly::canonical_less);
  return out;
}

}  // namespace ecint
