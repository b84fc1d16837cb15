#include <algorithm>
#include <stdexcept>

#include "ecint/factor_split.hpp"
#include "ecint/intersect.hpp"
#include "ecint/polyops.hpp"
#include "ecint/resultant.hpp"

namespace ecint {

ProfileSession::ProfileSession(unsigned p, bool compressed, int workers)
    : p_(p), compressed_(compressed), workers_(workers) {
  if (p >= 11 && !compressed)
    throw std::invalid_argument("ProfileSession: compression is mandatory for p >= 11");
}

std::pair<std::string, std::string> ProfileSession::var_names() const {
  return compressed_ ? std::make_pair(std::string("s"), std::string("w"))
                     : std::make_pair(std::string("u"), std::string("v"));
}

const ReductionPair& ProfileSession::pair() {
  if (!pair_) pair_ = reduce_fp_mod_f3(p_, workers_);
  return *pair_;
}

const CompressedPair& ProfileSession::cpair() {
  if (!cpair_) cpair_ = compress(pair());
  return *cpair_;
}

const MPoly& ProfileSession::poly0() {
  if (!polys_ready_) {
    p0_ = compressed_ ? cpair().ct0 : pair().c0;
    p1_ = compressed_ ? cpair().ct1 : pair().c1;
    polys_ready_ = true;
  }
  return p0_;
}

const MPoly& ProfileSession::poly1() {
  poly0();
  return p1_;
}

const MPoly& ProfileSession::raw_resultant(const std::string& eliminate) {
  auto [alpha, beta] = var_names();
  if (eliminate != alpha && eliminate != beta)
    throw std::invalid_argument("raw_resultant: eliminate must be " + alpha + " or " + beta);
  auto& slot = eliminate == beta ? res_elim_first_ : res_elim_second_;
  if (!slot) {
    ModularResultantRequest req;
    req.f = poly0();
    req.g = poly1();
    req.main = eliminate;
    req.sec = eliminate == beta ? alpha : beta;
    req.workers = workers_;
    MPoly r = modular_resultant(req).resultant;
    if (r.is_zero()) {
      MPoly g = gcd_poly(poly0(), poly1());
      throw std::runtime_error("resultant identically zero; the pair shares a factor of degree " +
                               std::to_string(g.total_degree().value_or(0)));
    }
    slot = std::move(r);
  }
  return *slot;
}

namespace {

unsigned strip_power(MPoly& f, const MPoly& divisor) {
  unsigned c = 0;
  while (true) {
    auto q = f.divide_exact(divisor);
    if (!q) return c;
    f = std::move(*q);
    ++c;
  }
}

}  // namespace

const ResultantProfile& ProfileSession::profile(const std::string& eliminate) {
  auto [alpha, beta] = var_names();
  auto& slot = eliminate == beta ? prof_first_ : prof_second_;
  if (slot) return *slot;
  const MPoly& R = raw_resultant(eliminate);
  const std::string kept = eliminate == beta ? alpha : beta;

  ResultantProfile prof;
  prof.p = p_;
  prof.eliminated = eliminate;
  prof.kept = kept;
  prof.compressed = compressed_;

  auto cp = R.content_primitive();
  prof.content = cp.sign < 0 ? BigInt(-cp.content) : cp.content;
  prof.content_pow2 = static_cast<unsigned>(v2(cp.content));
  MPoly body = cp.primitive;

  // monomial power: minimal exponent of the kept variable
  {
    uint32_t mn = UINT32_MAX;
    std::size_t vi = SIZE_MAX;
    for (std::size_t i = 0; i < body.vars().size(); ++i)
      if (body.vars()[i] == kept) vi = i;
    for (const auto& t : body.terms()) mn = std::min(mn, vi == SIZE_MAX ? 0 : t.e[vi]);
    if (mn != UINT32_MAX && mn > 0) {
      prof.monomial_power = mn;
      body = *body.divide_exact(MPoly::variable(kept, mn));
    }
  }

  // cyclotomic-style trivial factor
  if (kept == "s") {
    prof.cyclotomic_kind = "sm1";
    prof.cyclotomic_power = strip_power(body, MPoly::variable("s") - MPoly::constant(1));
  } else {
    prof.cyclotomic_kind = "t4m1";
    prof.cyclotomic_power =
        strip_power(body, MPoly::variable(kept, 4) - MPoly::constant(1));
  }

  // squarefree decomposition, then refine each part by small-factor splitting
  if (!body.is_constant()) {
    auto dec = squarefree_decompose(body);
    if (dec.content != 1 || dec.unit_sign != 1) {
      // primitive positive body: decomposition content must be trivial
      prof.content *= dec.content * dec.unit_sign;
    }
    for (const auto& [factor, mult] : dec.factors) {
      auto split = split_small_factors(factor, kept);
      for (const auto& f : split.factors) {
        ProfilePart part;
        part.factor = f;
        part.multiplicity = mult;
        part.degree = f.degree_or_zero(kept);
        prof.parts.push_back(std::move(part));
      }
      if (!split.cofactor.is_constant()) {
        ProfilePart part;
        part.factor = split.cofactor;
        part.multiplicity = mult;
        part.degree = split.cofactor.degree_or_zero(kept);
        prof.parts.push_back(std::move(part));
      }
    }
  }
  std::sort(prof.parts.begin(), prof.parts.end(), [](const ProfilePart& a, const ProfilePart& b) {
    if (a.multiplicity != b.multiplicity) return a.multiplicity < b.multiplicity;
    if (a.degree != b.degree) return a.degree < b.degree;
    return MPoly::canonical_less(a.factor, b.factor);
  });

  prof.verified = prof.reexpand() == R;
  if (!prof.verified)
    throw std::logic_error("profile: re-expansion does not reproduce the exact resultant");
  slot = std::move(prof);
  return *slot;
}

}  // namespace ecint
