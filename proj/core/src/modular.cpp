#include "ecint/modular.hpp"

#include <stdexcept>

namespace ecint {

FpCtx::FpCtx(uint64_t prime) : p(prime) {
  if (p < 3 || (p & 1) == 0) throw std::invalid_argument("FpCtx: prime must be odd and > 2");
  if (p >> 62) throw std::invalid_argument("FpCtx: prime must be < 2^62");
  uint64_t x = p;  // Newton iteration for p^{-1} mod 2^64
  for (int i = 0; i < 5; ++i) x *= 2 - p * x;
  ninv = ~x + 1;  // -p^{-1}
  unsigned __int128 r = (static_cast<unsigned __int128>(1) << 64) % p;
  one = static_cast<uint64_t>(r);
  r2 = static_cast<uint64_t>((static_cast<unsigned __int128>(one) * one) % p);
}

uint64_t FpCtx::pow(uint64_t a, uint64_t e) const {
  uint64_t r = one;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

int fp_deg(const FpVec& f) { return static_cast<int>(f.size()) - 1; }

void fp_trim(FpVec& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

FpVec fp_add(const FpCtx& F, const FpVec& a, const FpVec& b) {
  FpVec r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
  fp_trim(r);
  return r;
}

FpVec fp_sub(const FpCtx& F, const FpVec& a, const FpVec& b) {
  FpVec r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
  fp_trim(r);
  return r;
}

FpVec fp_scale(const FpCtx& F, const FpVec& a, uint64_t k) {
  if (k == 0) return {};
  FpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], k);
  fp_trim(r);
  return r;
}

FpVec fp_mul(const FpCtx& F, const FpVec& a, const FpVec& b) {
  if (a.empty() || b.empty()) return {};
  FpVec r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  fp_trim(r);
  return r;
}

void fp_divrem(const FpCtx& F, const FpVec& a, const FpVec& b, FpVec& q, FpVec& r) {
  if (b.empty()) throw std::invalid_argument("fp_divrem: division by zero");
  r = a;
  fp_trim(r);
  q.clear();
  if (r.size() < b.size()) return;
  q.assign(r.size() - b.size() + 1, 0);
  const uint64_t linv = F.inv(b.back());
  const int db = static_cast<int>(b.size()) - 1;
  for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
    if (r[i] == 0) continue;
    uint64_t c = F.mul(r[i], linv);
    q[i - db] = c;
    for (int j = 0; j <= db; ++j)
      r[i - db + j] = F.sub(r[i - db + j], F.mul(c, b[j]));
  }
  fp_trim(q);
  fp_trim(r);
}

FpVec fp_mod(const FpCtx& F, const FpVec& a, const FpVec& b) {
  FpVec q, r;
  fp_divrem(F, a, b, q, r);
  return r;
}

FpVec fp_gcd_monic(const FpCtx& F, FpVec a, FpVec b) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    FpVec r = fp_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_make_monic(F, a);
}

FpVec fp_derivative(const FpCtx& F, const FpVec& a) {
  if (a.size() <= 1) return {};
  FpVec r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = F.mul(a[i], F.to_m(i % F.p));
  fp_trim(r);
  return r;
}

uint64_t fp_eval(const FpCtx& F, const FpVec& a, uint64_t x_m) {
  uint64_t acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) acc = F.add(F.mul(acc, x_m), a[i]);
  return acc;
}

FpVec fp_make_monic(const FpCtx& F, const FpVec& a) {
  if (a.empty()) return {};
  return fp_scale(F, a, F.inv(a.back()));
}

FpVec fp_powmod(const FpCtx& F, const FpVec& base, const BigInt& e, const FpVec& mod) {
  FpVec r = {F.one};
  FpVec b = fp_mod(F, base, mod);
  std::size_t bits = bit_length(e);
  for (std::size_t i = bits; i-- > 0;) {
    r = fp_mod(F, fp_mul(F, r, r), mod);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = fp_mod(F, fp_mul(F, r, b), mod);
  }
  return r;
}

FpVec fp_interpolate(const FpCtx& F, const std::vector<uint64_t>& nodes, const FpVec& values) {
  const std::size_t n = nodes.size();
  if (values.size() != n) throw std::invalid_argument("fp_interpolate: size mismatch");
  if (n == 0) return {};
  // batch-invert the small node differences
  uint64_t maxnode = 0;
  for (auto t : nodes) maxnode = std::max(maxnode, t);
  std::vector<uint64_t> invsmall(maxnode + 1, 0);
  {
    std::vector<uint64_t> pref(maxnode + 1);
    uint64_t acc = F.one;
    for (uint64_t k = 1; k <= maxnode; ++k) {
      acc = F.mul(acc, F.to_m(k % F.p));
      pref[k] = acc;
    }
    if (maxnode >= 1) {
      uint64_t inv_acc = F.inv(pref[maxnode]);
      for (uint64_t k = maxnode; k >= 1; --k) {
        invsmall[k] = F.mul(inv_acc, k > 1 ? pref[k - 1] : F.one);
        inv_acc = F.mul(inv_acc, F.to_m(k % F.p));
      }
    }
  }
  // divided differences in place
  FpVec dd = values;
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = n - 1; i >= k; --i) {
      uint64_t num = F.sub(dd[i], dd[i - 1]);
      uint64_t diff = nodes[i] - nodes[i - k];  // nodes strictly increasing
      dd[i] = F.mul(num, invsmall[diff]);
      if (i == k) break;
    }
  }
  // Newton form to monomial basis
  FpVec poly;
  for (std::size_t i = n; i-- > 0;) {
    // poly = poly * (x - nodes[i]) + dd[i]
    poly.insert(poly.begin(), 0);
    uint64_t node_m = F.to_m(nodes[i] % F.p);
    for (std::size_t j = 0; j + 1 < poly.size(); ++j)
      poly[j] = F.sub(poly[j], F.mul(poly[j + 1], node_m));
    if (poly.empty()) poly.push_back(0);
    poly[0] = F.add(poly[0], dd[i]);
  }
  fp_trim(poly);
  return poly;
}

namespace {

/// prem(a, b): pseudo-remainder, lc(b)^(deg a - deg b + 1) * a mod b.
FpVec fp_prem(const FpCtx& F, const FpVec& a, const FpVec& b) {
  int da = fp_deg(a), db = fp_deg(b);
  if (da < db) return a;
  uint64_t scale = F.pow(b.back(), static_cast<uint64_t>(da - db + 1));
  FpVec q, r;
  fp_divrem(F, a, b, q, r);
  return fp_scale(F, r, scale);
}

}  // namespace

std::vector<FpVec> subresultant_chain(const FpCtx& F, const FpVec& A0, const FpVec& B0) {
  int n = fp_deg(A0), m = fp_deg(B0);
  if (n < 1 || m < 1) throw std::invalid_argument("subresultant_chain: degrees must be >= 1");
  if (n < m) {
    auto S = subresultant_chain(F, B0, A0);
    // S_j(A,B) = (-1)^{(n-j)(m-j)} S_j(B,A)
    for (int j = 0; j < static_cast<int>(S.size()); ++j) {
      if (((static_cast<long>(n - j) * (m - j)) & 1) != 0)
        for (auto& c : S[j]) c = F.neg(c);
    }
    return S;
  }
  std::vector<FpVec> S(m);  // S[0..m-1]
  // Ducos-style subresultant PRS. All divisions are exact over a field.
  uint64_t s = F.pow(B0.back(), static_cast<uint64_t>(n - m));
  FpVec A = B0;
  FpVec B;
  {  // first pseudo-remainder, sign-twisted divisor
    FpVec negB(B0.size());
    for (std::size_t i = 0; i < B0.size(); ++i) negB[i] = F.neg(B0[i]);
    B = fp_prem(F, A0, negB);
  }
  while (true) {
    int d = fp_deg(A), e = fp_deg(B);
    if (B.empty()) break;
    if (d - 1 < m && d - 1 >= 0) S[d - 1] = B;
    int delta = d - e;
    FpVec C;
    if (delta > 1) {
      // C = lc(B)^{delta-1} * B / s^{delta-1}
      uint64_t k = F.mul(F.pow(B.back(), static_cast<uint64_t>(delta - 1)),
                         F.inv(F.pow(s, static_cast<uint64_t>(delta - 1))));
      C = fp_scale(F, B, k);
      if (e < m && e >= 0) S[e] = C;
    } else {
      C = B;
    }
    if (e <= 0) break;
    {  // B := prem(A, -B) / (s^delta * lc(A))
      FpVec negB(B.size());
      for (std::size_t i = 0; i < B.size(); ++i) negB[i] = F.neg(B[i]);
      FpVec R = fp_prem(F, A, negB);
      uint64_t div = F.mul(F.pow(s, static_cast<uint64_t>(delta)), A.back());
      B = fp_scale(F, R, F.inv(div));
    }
    A = C;
    s = A.back();
  }
  return S;
}

uint64_t fp_resultant(const FpCtx& F, const FpVec& A0, const FpVec& B0) {
  FpVec a = A0, b = B0;
  fp_trim(a);
  fp_trim(b);
  if (fp_deg(a) < 1 || fp_deg(b) < 1) throw std::invalid_argument("fp_resultant: degrees must be >= 1");
  uint64_t res = F.one;
  int sign = 1;
  while (true) {
    FpVec r = fp_mod(F, a, b);
    int da = fp_deg(a), db = fp_deg(b), dr = fp_deg(r);
    if ((da & 1) && (db & 1)) sign = -sign;
    if (r.empty()) return 0;  // common factor
    res = F.mul(res, F.pow(b.back(), static_cast<uint64_t>(da - dr)));
    a = std::move(b);
    b = std::move(r);
    if (fp_deg(b) == 0) {
      res = F.mul(res, F.pow(b.back(), static_cast<uint64_t>(fp_deg(a))));
      return sign < 0 ? F.neg(res) : res;
    }
  }
}

std::vector<uint64_t> modular_primes(std::size_t count, std::size_t skip) {
  std::vector<uint64_t> out;
  out.reserve(count);
  BigInt cand = (BigInt(1) << 62) - 1;
  std::size_t skipped = 0;
  while (out.size() < count) {
    while (mpz_probab_prime_p(cand.get_mpz_t(), 30) == 0) cand -= 2;
    if (skipped < skip)
      ++skipped;
    else
      out.push_back(cand.get_ui());
    cand -= 2;
  }
  return out;
}

std::vector<uint64_t> small_primes(std::size_t count, uint64_t start) {
  std::vector<uint64_t> out;
  out.reserve(count);
  BigInt cand = static_cast<unsigned long>(start);
  while (out.size() < count) {
    mpz_nextprime(cand.get_mpz_t(), cand.get_mpz_t());
    out.push_back(cand.get_ui());
  }
  return out;
}

void CrtAccum::add_prime(uint64_t p, const std::vector<uint64_t>& vals) {
  if (vals.size() != residues.size()) throw std::invalid_argument("CrtAccum: size mismatch");
  BigInt bp = static_cast<unsigned long>(p);
  BigInt minv;  // modulus^{ -1 } mod p
  {
    BigInt mp = modulus % bp;
    if (mpz_invert(minv.get_mpz_t(), mp.get_mpz_t(), bp.get_mpz_t()) == 0)
      throw std::runtime_error("CrtAccum: moduli not coprime");
  }
  for (std::size_t i = 0; i < residues.size(); ++i) {
    BigInt v = static_cast<unsigned long>(vals[i]);
    BigInt t = ((v - residues[i]) * minv) % bp;
    if (t < 0) t += bp;
    residues[i] += modulus * t;
  }
  modulus *= bp;
}

BigInt CrtAccum::symmetric(std::size_t i) const {
  BigInt r = residues[i];
  if (r * 2 > modulus) r -= modulus;
  return r;
}

}  // namespace ecint
