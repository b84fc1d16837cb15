#include "ecint/resultant.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <stdexcept>
#include <thread>

#include "ecint/polyops.hpp"

namespace ecint {

namespace {

MPoly content_free_in(const MPoly& f, const std::string& var, MPoly* content_out) {
  auto coeffs = f.univariate_coeffs(var);
  MPoly c;
  for (const auto& ci : coeffs) {
    if (ci.is_zero()) continue;
    c = c.is_zero() ? ci.content_primitive().primitive * ci.content() : gcd_poly(c, ci);
  }
  if (content_out) *content_out = c;
  return *f.divide_exact(c);
}

}  // namespace

MPoly resultant_prs(const MPoly& f, const MPoly& g, const std::string& var) {
  if (f.is_zero() || g.is_zero()) return MPoly();
  uint32_t df0 = f.degree_or_zero(var), dg0 = g.degree_or_zero(var);
  if (df0 == 0) return f.pow(dg0);
  if (dg0 == 0) return g.pow(df0);
  int sign = 1;
  MPoly a = f, b = g;
  if (df0 < dg0) {
    std::swap(a, b);
    if ((df0 & 1) && (dg0 & 1)) sign = -sign;
  }
  // pull out contents with respect to var: Res(c*a, b) = c^(deg b) * Res(a, b)
  MPoly ca, cb;
  a = content_free_in(a, var, &ca);
  b = content_free_in(b, var, &cb);
  MPoly t = ca.pow(b.degree_or_zero(var)) * cb.pow(a.degree_or_zero(var));
  MPoly gg = MPoly::constant(1), hh = MPoly::constant(1);
  while (b.degree_or_zero(var) > 0) {
    uint32_t da = a.degree_or_zero(var), db = b.degree_or_zero(var);
    uint32_t d = da - db;
    if ((da & 1) && (db & 1)) sign = -sign;
    auto pd = pseudo_divrem(a, b, var);
    MPoly r = pd.remainder;
    // normalize to the textbook prem scaling lc(b)^(d+1)
    if (pd.scale_power < d + 1) {
      auto bc = b.univariate_coeffs(var);
      r = r * bc[db].pow(d + 1 - pd.scale_power);
    }
    a = b;
    MPoly div = gg * hh.pow(d);
    b = r.is_zero() ? MPoly() : *r.divide_exact(div);
    gg = a.coeff_of(var, a.degree_or_zero(var));
    if (d > 0) {
      MPoly num = gg.pow(d);
      hh = *num.divide_exact(hh.pow(d - 1));
    }
  }
  if (b.is_zero()) return MPoly();
  uint32_t da = a.degree_or_zero(var);
  MPoly b0 = b.coeff_of(var, 0);
  MPoly num = b0.pow(da);
  MPoly h_final = *num.divide_exact(hh.pow(da > 0 ? da - 1 : 0));
  MPoly out = h_final * t;
  return sign < 0 ? -out : out;
}

namespace {

struct BivariatePrep {
  // dense sec-coefficient arrays per main-degree, as BigInt
  std::vector<std::vector<BigInt>> fc, gc;
  int nf = 0, ng = 0;        // main degrees
  int dsec_f = 0, dsec_g = 0;
  BigInt lcf_content, lcg_content;
};

BivariatePrep prepare(const MPoly& f, const MPoly& g, const std::string& main,
                      const std::string& sec) {
  BivariatePrep P;
  auto build = [&](const MPoly& h, std::vector<std::vector<BigInt>>& out, int& dmain, int& dsec) {
    dmain = static_cast<int>(h.degree_or_zero(main));
    dsec = static_cast<int>(h.degree_or_zero(sec));
    auto coeffs = h.univariate_coeffs(main);
    out.resize(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      out[i].assign(dsec + 1, BigInt(0));
      if (coeffs[i].is_zero()) continue;
      auto dense = coeffs[i].dense_univariate(sec);
      for (std::size_t k = 0; k < dense.size(); ++k) out[i][k] = dense[k];
    }
  };
  build(f, P.fc, P.nf, P.dsec_f);
  build(g, P.gc, P.ng, P.dsec_g);
  auto vec_content = [](const std::vector<BigInt>& v) {
    BigInt c = 0;
    for (const auto& x : v) c = bigint_gcd(c, x);
    return c;
  };
  P.lcf_content = vec_content(P.fc[P.nf]);
  P.lcg_content = vec_content(P.gc[P.ng]);
  return P;
}

struct PrimeImage {
  FpCtx F;
  // per main-degree, dense sec coefficients in Montgomery form
  std::vector<FpVec> fc, gc;

  PrimeImage(const BivariatePrep& P, uint64_t p) : F(p) {
    auto conv = [&](const std::vector<std::vector<BigInt>>& in, std::vector<FpVec>& out) {
      out.resize(in.size());
      for (std::size_t i = 0; i < in.size(); ++i) {
        out[i].resize(in[i].size());
        for (std::size_t k = 0; k < in[i].size(); ++k) out[i][k] = F.to_m(mod_u64(in[i][k], p));
      }
    };
    conv(P.fc, fc);
    conv(P.gc, gc);
  }

  // evaluate the pair at sec = t; returns false if a leading coefficient dies
  bool eval_pair(uint64_t t_plain, FpVec& A, FpVec& B) const {
    uint64_t t = F.to_m(t_plain % F.p);
    A.resize(fc.size());
    B.resize(gc.size());
    for (std::size_t i = 0; i < fc.size(); ++i) A[i] = fp_eval(F, fc[i], t);
    for (std::size_t i = 0; i < gc.size(); ++i) B[i] = fp_eval(F, gc[i], t);
    return A.back() != 0 && B.back() != 0;
  }
};

/// Degree sequence of the Euclidean PRS; used to keep subresultant level
/// targets on the generic specialization branch.
std::vector<int> prs_degree_sequence(const FpCtx& F, FpVec a, FpVec b) {
  std::vector<int> seq;
  while (!b.empty()) {
    seq.push_back(fp_deg(b));
    FpVec r = fp_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return seq;
}

struct PerPrimeOutput {
  uint64_t p = 0;
  bool usable = false;
  std::vector<uint64_t> res_coeffs;                      // plain form, size K+1
  std::map<int, std::vector<std::vector<uint64_t>>> lvl;  // level -> [k+1][K+1]
};

PerPrimeOutput run_prime(const BivariatePrep& P, uint64_t p, int K,
                         const std::vector<int>& levels,
                         const std::vector<int>* generic_seq) {
  PerPrimeOutput out;
  out.p = p;
  if (mod_u64(P.lcf_content, p) == 0 || mod_u64(P.lcg_content, p) == 0) return out;
  PrimeImage img(P, p);
  const FpCtx& F = img.F;
  std::vector<uint64_t> nodes;
  FpVec res_vals;
  std::map<int, std::vector<FpVec>> lvl_vals;
  for (int lv : levels) lvl_vals[lv].assign(lv + 1, FpVec());
  nodes.reserve(K + 1);
  res_vals.reserve(K + 1);
  uint64_t t = 0;
  FpVec A, B;
  while (static_cast<int>(nodes.size()) < K + 1) {
    if (t > static_cast<uint64_t>(4 * K + 64)) return out;  // too many bad points; drop prime
    uint64_t cur = t++;
    if (!img.eval_pair(cur, A, B)) continue;
    if (generic_seq && !levels.empty()) {
      if (prs_degree_sequence(F, A, B) != *generic_seq) continue;
    }
    uint64_t r = fp_resultant(F, A, B);
    std::map<int, std::vector<uint64_t>> here;
    if (!levels.empty()) {
      auto chain = subresultant_chain(F, A, B);
      for (int lv : levels) {
        std::vector<uint64_t> cs(lv + 1, 0);
        if (lv < static_cast<int>(chain.size()))
          for (int k = 0; k <= lv && k < static_cast<int>(chain[lv].size()); ++k)
            cs[k] = chain[lv][k];
        here[lv] = std::move(cs);
      }
    }
    nodes.push_back(cur);
    res_vals.push_back(r);
    for (int lv : levels)
      for (int k = 0; k <= lv; ++k) lvl_vals[lv][k].push_back(here[lv][k]);
  }
  // interpolate every target
  FpVec ic = fp_interpolate(F, nodes, res_vals);
  out.res_coeffs.assign(K + 1, 0);
  for (std::size_t i = 0; i < ic.size(); ++i) out.res_coeffs[i] = F.from_m(ic[i]);
  for (int lv : levels) {
    out.lvl[lv].assign(lv + 1, std::vector<uint64_t>(K + 1, 0));
    for (int k = 0; k <= lv; ++k) {
      FpVec c = fp_interpolate(F, nodes, lvl_vals[lv][k]);
      for (std::size_t i = 0; i < c.size(); ++i) out.lvl[lv][k][i] = F.from_m(c[i]);
    }
  }
  out.usable = true;
  return out;
}

std::size_t hadamard_prime_count(const BivariatePrep& P) {
  auto row_norm2 = [](const std::vector<std::vector<BigInt>>& coeffs) {
    BigInt s = 0;
    for (const auto& c : coeffs) {
      BigInt l1 = 0;
      for (const auto& x : c) l1 += bigint_abs(x);
      s += l1 * l1;
    }
    return s;
  };
  BigInt nf = row_norm2(P.fc), ng = row_norm2(P.gc);
  // |coeff| <= prod over rows of sqrt(row l1-norm^2 sums)
  std::size_t bits = P.ng * ((bit_length(nf) + 1) / 2 + 1) + P.nf * ((bit_length(ng) + 1) / 2 + 1);
  return bits / 61 + 1 + 2;  // two extra primes as consistency margin
}

}  // namespace

ModularResultantResult modular_resultant(const ModularResultantRequest& req) {
  for (const MPoly* h : {&req.f, &req.g})
    for (const auto& v : h->effective_vars())
      if (v != req.main && v != req.sec)
        throw std::invalid_argument("modular_resultant: unexpected variable " + v);
  if (req.f.degree_or_zero(req.main) == 0 || req.g.degree_or_zero(req.main) == 0)
    throw std::invalid_argument("modular_resultant: inputs must be nonzero in main variable");

  BivariatePrep P = prepare(req.f, req.g, req.main, req.sec);
  const int K = P.ng * P.dsec_f + P.nf * P.dsec_g;
  std::size_t want = hadamard_prime_count(P);
  int workers = req.workers > 0 ? req.workers
                                : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;

  // establish the generic PRS degree sequence (levels only) by majority vote
  std::vector<int> generic_seq;
  if (!req.levels.empty()) {
    auto probe_primes = modular_primes(2, want + 16);
    std::map<std::vector<int>, int> votes;
    for (uint64_t p : probe_primes) {
      if (mod_u64(P.lcf_content, p) == 0 || mod_u64(P.lcg_content, p) == 0) continue;
      PrimeImage img(P, p);
      FpVec A, B;
      int got = 0;
      for (uint64_t t = 0; got < 16 && t < 200; ++t) {
        if (!img.eval_pair(t, A, B)) continue;
        votes[prs_degree_sequence(img.F, A, B)]++;
        ++got;
      }
    }
    int best = -1;
    for (auto& [seq, n] : votes)
      if (n > best) {
        best = n;
        generic_seq = seq;
      }
  }

  ModularResultantResult out;
  out.points_per_prime = K + 1;
  CrtAccum res_crt;
  res_crt.init(K + 1);
  std::map<int, std::vector<CrtAccum>> lvl_crt;
  for (int lv : req.levels) {
    lvl_crt[lv].resize(lv + 1);
    for (auto& a : lvl_crt[lv]) a.init(K + 1);
  }

  std::size_t produced = 0, prime_cursor = 0;
  auto primes = modular_primes(want + 32);
  while (produced < want) {
    std::size_t chunk = std::min<std::size_t>(std::max(workers, 1) * 2, want - produced);
    std::vector<PerPrimeOutput> results(chunk);
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= chunk) return;
        if (prime_cursor + i >= primes.size()) continue;
        results[i] = run_prime(P, primes[prime_cursor + i], K, req.levels,
                               generic_seq.empty() ? nullptr : &generic_seq);
      }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    for (auto& r : results) {
      if (!r.usable) continue;
      res_crt.add_prime(r.p, r.res_coeffs);
      for (int lv : req.levels)
        for (int k = 0; k <= lv; ++k) lvl_crt[lv][k].add_prime(r.p, r.lvl[lv][k]);
      ++produced;
      ++out.primes_used;
    }
    prime_cursor += chunk;
    if (prime_cursor >= primes.size()) primes = modular_primes(primes.size() * 2);
  }

  auto lift = [&](CrtAccum& acc) {
    std::vector<BigInt> v(K + 1);
    for (int i = 0; i <= K; ++i) v[i] = acc.symmetric(i);
    return MPoly::from_dense_univariate(req.sec, v);
  };
  out.resultant = lift(res_crt);
  for (int lv : req.levels) {
    std::vector<MPoly> cs;
    for (int k = 0; k <= lv; ++k) cs.push_back(lift(lvl_crt[lv][k]));
    out.subres[lv] = std::move(cs);
  }

  // mandatory verification pass: fresh primes and points vs direct images
  {
    std::mt19937_64 rng(0x5eedULL ^ (static_cast<uint64_t>(K) << 20));
    auto fresh = modular_primes(3, want + 40);
    for (uint64_t p : fresh) {
      if (mod_u64(P.lcf_content, p) == 0 || mod_u64(P.lcg_content, p) == 0) continue;
      PrimeImage img(P, p);
      const FpCtx& F = img.F;
      int checked = 0;
      uint64_t t = rng() % (2 * K + 50);
      while (checked < 4) {
        ++t;
        FpVec A, B;
        if (!img.eval_pair(t, A, B)) continue;
        if (!generic_seq.empty() && prs_degree_sequence(F, A, B) != generic_seq) continue;
        uint64_t direct = fp_resultant(F, A, B);
        // evaluate the exact interpolated resultant mod (p, t)
        std::map<std::string, uint64_t> assign{{req.sec, t}};
        auto image = eval_mod(out.resultant, assign, p);
        if (image.residue != F.from_m(direct))
          throw std::runtime_error("modular_resultant: verification failed (resultant)");
        if (!req.levels.empty()) {
          auto chain = subresultant_chain(F, A, B);
          for (int lv : req.levels) {
            for (int k = 0; k <= lv; ++k) {
              uint64_t want_v = 0;
              if (lv < static_cast<int>(chain.size()) && k < static_cast<int>(chain[lv].size()))
                want_v = F.from_m(chain[lv][k]);
              auto im = eval_mod(out.subres[lv][k], assign, p);
              if (im.residue != want_v)
                throw std::runtime_error("modular_resultant: verification failed (subresultant)");
            }
          }
        }
        ++checked;
      }
      break;  // one good fresh prime with 4 points suffices
    }
  }
  return out;
}

MPoly resultant(const MPoly& f, const MPoly& g, const std::string& var) {
  if (f.is_zero() || g.is_zero() || f.degree_or_zero(var) == 0 || g.degree_or_zero(var) == 0)
    throw std::invalid_argument("resultant: inputs must be nonzero in " + var);
  auto eff_f = f.effective_vars();
  auto eff_g = g.effective_vars();
  std::vector<std::string> eff = eff_f;
  for (const auto& v : eff_g)
    if (std::find(eff.begin(), eff.end(), v) == eff.end()) eff.push_back(v);
  bool big = f.total_degree().value_or(0) > 40 || g.total_degree().value_or(0) > 40 ||
             f.term_count() > 100 || g.term_count() > 100;
  if (eff.size() == 2 && big) {
    ModularResultantRequest req;
    req.f = f;
    req.g = g;
    req.main = var;
    req.sec = eff[0] == var ? eff[1] : eff[0];
    return modular_resultant(req).resultant;
  }
  return resultant_prs(f, g, var);
}

}  // namespace ecint
