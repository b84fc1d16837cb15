#include "ecint/mpoly.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace ecint {

namespace {

const char* kKnownOrder[] = {"x", "delta", "u", "v", "lambda", "s", "w", "a", "t"};

bool grlex_less(const ExpVec& a, const ExpVec& b) {
  uint32_t da = MPoly::total_deg(a), db = MPoly::total_deg(b);
  if (da != db) return da < db;
  // lexicographic, earlier variable dominates
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

uint64_t pack_exp(const ExpVec& e) {
  uint64_t k = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (e[i] > 0xFFFFu) throw std::overflow_error("MPoly: exponent exceeds 16-bit packing limit");
    k = (k << 16) | e[i];
  }
  return k;
}

ExpVec unpack_exp(uint64_t k) {
  ExpVec e{};
  for (std::size_t i = kMaxVars; i-- > 0;) {
    e[i] = static_cast<uint32_t>(k & 0xFFFFu);
    k >>= 16;
  }
  return e;
}

}  // namespace

int var_priority(const std::string& name) {
  int i = 0;
  for (const char* k : kKnownOrder) {
    if (name == k) return i;
    ++i;
  }
  return 1000;  // unknown names sort after known ones, alphabetically (see var_name_less)
}

static bool var_name_less(const std::string& a, const std::string& b) {
  int pa = var_priority(a), pb = var_priority(b);
  if (pa != pb) return pa < pb;
  return a < b;
}

uint32_t MPoly::total_deg(const ExpVec& e) {
  uint32_t d = 0;
  for (auto x : e) d += x;
  return d;
}

void MPoly::normalize() {
  if (vars_.size() > kMaxVars) throw std::invalid_argument("MPoly: too many variables");
  std::vector<Term> out;
  out.reserve(terms_.size());
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return grlex_less(b.e, a.e); });
  for (auto& t : terms_) {
    if (t.c == 0) continue;
    if (!out.empty() && out.back().e == t.e)
      out.back().c += t.c;
    else
      out.push_back(std::move(t));
  }
  terms_.clear();
  for (auto& t : out)
    if (t.c != 0) terms_.push_back(std::move(t));
  // trim variables that appear nowhere, keep list canonicalized
  std::array<bool, kMaxVars> used{};
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (t.e[i] > 0) used[i] = true;
  bool all_used = true;
  for (std::size_t i = 0; i < vars_.size(); ++i) all_used = all_used && used[i];
  if (!all_used) {
    std::vector<std::string> nv;
    std::array<std::size_t, kMaxVars> remap{};
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (used[i]) {
        remap[i] = nv.size();
        nv.push_back(vars_[i]);
      }
    for (auto& t : terms_) {
      ExpVec ne{};
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) ne[remap[i]] = t.e[i];
      t.e = ne;
    }
    vars_ = std::move(nv);
  }
}

MPoly MPoly::constant(BigInt c) {
  MPoly f;
  if (c != 0) f.terms_.push_back(Term{ExpVec{}, std::move(c)});
  return f;
}

MPoly MPoly::variable(const std::string& name, uint32_t exp) {
  MPoly f;
  if (exp == 0) return constant(1);
  f.vars_ = {name};
  Term t;
  t.e[0] = exp;
  t.c = 1;
  f.terms_.push_back(std::move(t));
  return f;
}

MPoly MPoly::monomial(BigInt c, const std::vector<std::pair<std::string, uint32_t>>& pows) {
  MPoly f = constant(std::move(c));
  for (const auto& [name, e] : pows)
    if (e > 0) f = f * variable(name, e);
  return f;
}

MPoly MPoly::from_terms(std::vector<std::string> vars, std::vector<Term> terms) {
  MPoly f;
  f.vars_ = std::move(vars);
  f.terms_ = std::move(terms);
  // enforce canonical variable ordering up front
  std::vector<std::size_t> idx(f.vars_.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return var_name_less(f.vars_[a], f.vars_[b]); });
  bool sorted = true;
  for (std::size_t i = 0; i < idx.size(); ++i) sorted = sorted && idx[i] == i;
  if (!sorted) {
    std::vector<std::string> nv(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) nv[i] = f.vars_[idx[i]];
    for (auto& t : f.terms_) {
      ExpVec ne{};
      for (std::size_t i = 0; i < idx.size(); ++i) ne[i] = t.e[idx[i]];
      t.e = ne;
    }
    f.vars_ = std::move(nv);
  }
  f.normalize();
  return f;
}

BigInt MPoly::constant_value() const {
  if (terms_.empty()) return 0;
  const Term& last = terms_.back();
  if (total_deg(last.e) == 0) return last.c;
  return 0;
}

std::optional<uint32_t> MPoly::total_degree() const {
  if (terms_.empty()) return std::nullopt;
  return total_deg(terms_.front().e);
}

std::optional<uint32_t> MPoly::degree(const std::string& var) const {
  if (terms_.empty()) return std::nullopt;
  std::size_t vi = vars_.size();
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == var) vi = i;
  if (vi == vars_.size()) return 0;
  uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.e[vi]);
  return d;
}

const BigInt& MPoly::lc() const {
  static const BigInt zero = 0;
  return terms_.empty() ? zero : terms_.front().c;
}

std::vector<std::string> MPoly::effective_vars() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    for (const auto& t : terms_)
      if (t.e[i] > 0) {
        out.push_back(vars_[i]);
        break;
      }
  }
  return out;
}

void align_vars(MPoly& a, MPoly& b) {
  if (a.vars_ == b.vars_) return;
  std::vector<std::string> merged = a.vars_;
  for (const auto& v : b.vars_)
    if (std::find(merged.begin(), merged.end(), v) == merged.end()) merged.push_back(v);
  std::sort(merged.begin(), merged.end(), var_name_less);
  if (merged.size() > kMaxVars) throw std::invalid_argument("MPoly: merged variable list too long");
  auto remap = [&](MPoly& f) {
    std::array<std::size_t, kMaxVars> pos{};
    for (std::size_t i = 0; i < f.vars_.size(); ++i) {
      auto it = std::find(merged.begin(), merged.end(), f.vars_[i]);
      pos[i] = static_cast<std::size_t>(it - merged.begin());
    }
    for (auto& t : f.terms_) {
      ExpVec ne{};
      for (std::size_t i = 0; i < f.vars_.size(); ++i) ne[pos[i]] = t.e[i];
      t.e = ne;
    }
    f.vars_ = merged;
    std::sort(f.terms_.begin(), f.terms_.end(),
              [](const MPoly::Term& x, const MPoly::Term& y) { return grlex_less(y.e, x.e); });
  };
  remap(a);
  remap(b);
}

MPoly MPoly::operator-() const {
  MPoly f = *this;
  for (auto& t : f.terms_) t.c = -t.c;
  return f;
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly a = *this, b = o;
  align_vars(a, b);
  MPoly out;
  out.vars_ = a.vars_;
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() || (i < a.terms_.size() && grlex_less(b.terms_[j].e, a.terms_[i].e))) {
      out.terms_.push_back(a.terms_[i++]);
    } else if (i == a.terms_.size() || grlex_less(a.terms_[i].e, b.terms_[j].e)) {
      out.terms_.push_back(b.terms_[j++]);
    } else {
      Term t;
      t.e = a.terms_[i].e;
      t.c = a.terms_[i].c + b.terms_[j].c;
      ++i;
      ++j;
      if (t.c != 0) out.terms_.push_back(std::move(t));
    }
  }
  out.normalize();
  return out;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const BigInt& k) const {
  if (k == 0) return MPoly();
  MPoly f = *this;
  for (auto& t : f.terms_) t.c *= k;
  return f;
}

MPoly MPoly::operator*(const MPoly& o) const {
  if (is_zero() || o.is_zero()) return MPoly();
  MPoly a = *this, b = o;
  align_vars(a, b);
  // dense fast path for effectively univariate operands
  if (a.vars_.size() <= 1) {
    const std::string var = a.vars_.empty() ? "" : a.vars_[0];
    if (a.vars_.empty()) return b * a.terms_[0].c;
    uint32_t da = *a.degree(var), db = *b.degree(var);
    if (static_cast<uint64_t>(da) * b.terms_.size() + static_cast<uint64_t>(db) * a.terms_.size() <
        static_cast<uint64_t>(a.terms_.size()) * b.terms_.size() * 4) {
      auto va = a.dense_univariate(var);
      auto vb = b.dense_univariate(var);
      std::vector<BigInt> vc(va.size() + vb.size() - 1);
      for (std::size_t i = 0; i < va.size(); ++i) {
        if (va[i] == 0) continue;
        for (std::size_t j = 0; j < vb.size(); ++j) {
          if (vb[j] == 0) continue;
          vc[i + j] += va[i] * vb[j];
        }
      }
      return from_dense_univariate(var, vc);
    }
  }
  std::unordered_map<uint64_t, BigInt> acc;
  acc.reserve(a.terms_.size() * 2 + b.terms_.size() * 2);
  BigInt prod;
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      ExpVec e{};
      for (std::size_t k2 = 0; k2 < kMaxVars; ++k2) e[k2] = ta.e[k2] + tb.e[k2];
      prod = ta.c * tb.c;
      auto [it, fresh] = acc.emplace(pack_exp(e), prod);
      if (!fresh) it->second += prod;
    }
  }
  MPoly out;
  out.vars_ = a.vars_;
  out.terms_.reserve(acc.size());
  for (auto& [k, c] : acc) {
    if (c == 0) continue;
    Term t;
    t.e = unpack_exp(k);
    t.c = std::move(c);
    out.terms_.push_back(std::move(t));
  }
  out.normalize();
  return out;
}

bool MPoly::operator==(const MPoly& o) const {
  MPoly a = *this, b = o;
  align_vars(a, b);
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].e != b.terms_[i].e || a.terms_[i].c != b.terms_[i].c) return false;
  return true;
}

MPoly MPoly::pow(unsigned long e) const {
  MPoly r = constant(1);
  MPoly base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

MPoly MPoly::derivative(const std::string& var) const {
  std::size_t vi = vars_.size();
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == var) vi = i;
  if (vi == vars_.size()) return MPoly();
  MPoly out;
  out.vars_ = vars_;
  for (const auto& t : terms_) {
    if (t.e[vi] == 0) continue;
    Term nt;
    nt.e = t.e;
    nt.e[vi] -= 1;
    nt.c = t.c * BigInt(t.e[vi]);
    out.terms_.push_back(std::move(nt));
  }
  out.normalize();
  return out;
}

MPoly MPoly::coeff_of(const std::string& var, uint32_t k) const {
  std::size_t vi = vars_.size();
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == var) vi = i;
  if (vi == vars_.size()) return k == 0 ? *this : MPoly();
  MPoly out;
  out.vars_ = vars_;
  for (const auto& t : terms_) {
    if (t.e[vi] != k) continue;
    Term nt = t;
    nt.e[vi] = 0;
    out.terms_.push_back(std::move(nt));
  }
  out.normalize();
  return out;
}

std::vector<MPoly> MPoly::univariate_coeffs(const std::string& var) const {
  uint32_t d = degree(var).value_or(0);
  std::vector<MPoly> out(d + 1);
  std::size_t vi = vars_.size();
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == var) vi = i;
  if (vi == vars_.size()) {
    out[0] = *this;
    return out;
  }
  for (auto& c : out) c.vars_ = vars_;
  for (const auto& t : terms_) {
    Term nt = t;
    uint32_t k = nt.e[vi];
    nt.e[vi] = 0;
    out[k].terms_.push_back(std::move(nt));
  }
  for (auto& c : out) c.normalize();
  return out;
}

MPoly MPoly::from_univariate_coeffs(const std::string& var, const std::vector<MPoly>& coeffs) {
  // assemble all terms in one pass; avoids quadratic re-merging
  std::vector<std::string> vars = {var};
  std::vector<Term> terms;
  for (uint32_t k = 0; k < coeffs.size(); ++k) {
    const MPoly& c = coeffs[k];
    if (c.is_zero()) continue;
    std::array<std::size_t, kMaxVars> pos{};
    std::array<bool, kMaxVars> havepos{};
    for (std::size_t i = 0; i < c.vars_.size(); ++i) {
      if (c.vars_[i] == var) throw std::invalid_argument("from_univariate_coeffs: coefficient contains " + var);
      auto it = std::find(vars.begin(), vars.end(), c.vars_[i]);
      if (it == vars.end()) {
        vars.push_back(c.vars_[i]);
        if (vars.size() > kMaxVars) throw std::invalid_argument("from_univariate_coeffs: too many variables");
        pos[i] = vars.size() - 1;
      } else {
        pos[i] = static_cast<std::size_t>(it - vars.begin());
      }
      havepos[i] = true;
    }
    (void)havepos;
    for (const auto& t : c.terms_) {
      Term nt;
      nt.e[0] = k;
      for (std::size_t i = 0; i < c.vars_.size(); ++i) nt.e[pos[i]] = t.e[i];
      nt.c = t.c;
      terms.push_back(std::move(nt));
    }
  }
  return from_terms(std::move(vars), std::move(terms));
}

std::vector<BigInt> MPoly::dense_univariate(const std::string& var) const {
  auto eff = effective_vars();
  if (eff.size() > 1 || (eff.size() == 1 && eff[0] != var))
    throw std::invalid_argument("dense_univariate: polynomial not univariate in " + var);
  std::vector<BigInt> out(degree(var).value_or(0) + 1);
  std::size_t vi = vars_.size();
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == var) vi = i;
  for (const auto& t : terms_) out[vi == vars_.size() ? 0 : t.e[vi]] = t.c;
  return out;
}

MPoly MPoly::from_dense_univariate(const std::string& var, const std::vector<BigInt>& coeffs) {
  MPoly out;
  out.vars_ = {var};
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    if (coeffs[k] == 0) continue;
    Term t;
    t.e[0] = static_cast<uint32_t>(k);
    t.c = coeffs[k];
    out.terms_.push_back(std::move(t));
  }
  out.normalize();
  return out;
}

BigInt MPoly::content() const {
  BigInt g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

int MPoly::lc_sign() const {
  if (terms_.empty()) return +1;
  return terms_.front().c < 0 ? -1 : +1;
}

MPoly::ContentPrimitive MPoly::content_primitive() const {
  ContentPrimitive r;
  if (terms_.empty()) {
    r.content = 0;
    r.sign = +1;
    return r;
  }
  r.content = content();
  r.sign = lc_sign();
  r.primitive = *this;
  BigInt d = r.sign < 0 ? BigInt(-r.content) : r.content;
  for (auto& t : r.primitive.terms_) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), t.c.get_mpz_t(), d.get_mpz_t());
    t.c = std::move(q);
  }
  return r;
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& g) const {
  if (g.is_zero()) return std::nullopt;
  if (is_zero()) return MPoly();
  MPoly r = *this, d = g;
  MPoly q;
  align_vars(r, d);
  q.vars_ = r.vars_;
  while (!r.terms_.empty()) {
    align_vars(r, d);  // normalize() may trim vars after a subtraction
    const ExpVec& de = d.terms_.front().e;
    const BigInt& dc = d.terms_.front().c;
    const ExpVec& re = r.terms_.front().e;
    ExpVec qe{};
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (re[i] < de[i]) return std::nullopt;
      qe[i] = re[i] - de[i];
    }
    BigInt qc, rem;
    mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), r.terms_.front().c.get_mpz_t(), dc.get_mpz_t());
    if (rem != 0) return std::nullopt;
    MPoly m;
    m.vars_ = r.vars_;
    m.terms_.push_back(Term{qe, qc});
    q.terms_.push_back(Term{qe, qc});
    r = r - m * d;
  }
  q.normalize();
  return q;
}

MPoly MPoly::substitute(const std::string& var, const MPoly& value) const {
  auto coeffs = univariate_coeffs(var);
  MPoly acc;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    acc = acc * value + coeffs[k];
  }
  return acc;
}

MPoly MPoly::substitute_rational(const std::string& var, const MPoly& num, const MPoly& den) const {
  if (den.is_zero()) throw std::invalid_argument("substitute_rational: zero denominator");
  uint32_t d = degree(var).value_or(0);
  auto coeffs = univariate_coeffs(var);
  // sum_k c_k num^k den^(d-k), Horner in num with trailing den powers
  MPoly acc;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    acc = acc * num;
    if (!coeffs[k].is_zero()) {
      acc = acc + coeffs[k] * den.pow(d - static_cast<uint32_t>(k));
    }
  }
  return acc;
}

BigInt MPoly::eval(const std::map<std::string, BigInt>& point) const {
  BigInt total = 0;
  for (const auto& t : terms_) {
    BigInt v = t.c;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (t.e[i] == 0) continue;
      auto it = point.find(vars_[i]);
      if (it == point.end()) throw std::invalid_argument("eval: missing value for " + vars_[i]);
      v *= bigint_pow(it->second, t.e[i]);
    }
    total += v;
  }
  return total;
}

std::vector<std::string> MPoly::to_lines() const {
  std::vector<std::string> out;
  if (terms_.empty()) {
    out.push_back("0");
    return out;
  }
  for (const auto& t : terms_) {
    std::string line = t.c.get_str(10);
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (t.e[i] > 0) line += " " + vars_[i] + "^" + std::to_string(t.e[i]);
    out.push_back(std::move(line));
  }
  return out;
}

std::string MPoly::to_string() const {
  auto lines = to_lines();
  std::string s;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i) s += " + ";
    s += lines[i];
  }
  return s;
}

MPoly MPoly::parse(const std::string& text) {
  // normalize "+" separators to newlines, then parse term per line
  std::string t;
  t.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '+' && i > 0 && text[i - 1] == ' ') {
      t += '\n';
      if (i + 1 < text.size() && text[i + 1] == ' ') ++i;
    } else {
      t += text[i];
    }
  }
  std::istringstream in(t);
  std::string line;
  std::vector<std::string> vars;
  std::vector<Term> terms;
  auto var_index = [&](const std::string& name) -> std::size_t {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return i;
    vars.push_back(name);
    if (vars.size() > kMaxVars) throw std::invalid_argument("MPoly::parse: too many variables");
    return vars.size() - 1;
  };
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok[0] == '#') continue;
    Term term;
    term.c = BigInt(tok, 10);
    while (ls >> tok) {
      auto caret = tok.find('^');
      std::string name = tok.substr(0, caret);
      uint32_t e = 1;
      if (caret != std::string::npos) e = static_cast<uint32_t>(std::stoul(tok.substr(caret + 1)));
      term.e[var_index(name)] += e;
    }
    if (term.c != 0 || MPoly::total_deg(term.e) == 0) terms.push_back(std::move(term));
  }
  return from_terms(std::move(vars), std::move(terms));
}

bool MPoly::canonical_less(const MPoly& a, const MPoly& b) {
  auto da = a.total_degree().value_or(0), db = b.total_degree().value_or(0);
  if (da != db) return da < db;
  if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size();
  MPoly x = a, y = b;
  align_vars(x, y);
  for (std::size_t i = 0; i < x.terms_.size(); ++i) {
    if (x.terms_[i].e != y.terms_[i].e) return grlex_less(x.terms_[i].e, y.terms_[i].e);
    if (x.terms_[i].c != y.terms_[i].c) return x.terms_[i].c < y.terms_[i].c;
  }
  return false;
}

}  // namespace ecint
