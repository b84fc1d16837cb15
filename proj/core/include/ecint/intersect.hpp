#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ecint/mpoly.hpp"
#include "ecint/real.hpp"

namespace ecint {

/// Obstruction pair: the degree-<=1 remainder of F_p(v, delta) under
/// pseudo-division by F_3(u, delta) in delta, coefficient-wise normalized to
/// primitive parts with common u/v-monomial factors stripped.
struct ReductionPair {
  unsigned p = 0;
  MPoly c0;  // constant (delta^0) part, primitive, monomial-free, positive lc
  MPoly c1;  // delta^1 part, same normalization
  BigInt raw_content0, raw_content1;  // integer contents stripped
  int raw_sign0 = 1, raw_sign1 = 1;
  unsigned mono_u0 = 0, mono_v0 = 0;  // monomial exponents stripped from c0
  unsigned mono_u1 = 0, mono_v1 = 0;  // and from c1
  unsigned scale_power = 0;  // lc(F_3)^scale_power used by the pseudo-division
};

/// reduce_Fp_mod_F3: p >= 5 (p = 3 is degenerate and rejected).
ReductionPair reduce_fp_mod_f3(unsigned p, int workers = 0);

/// Compressed form: C_{p,i}(u, v) = u^{k_i} * ct_i(s, w), s = u^4, w = v/u.
struct CompressedPair {
  unsigned p = 0;
  MPoly ct0, ct1;       // polynomials in (s, w)
  unsigned k0 = 0, k1 = 0;  // stripped monomial prefactor exponents
};

CompressedPair compress(const ReductionPair& pair);
/// Exact round-trip back to the (u, v) polynomials.
MPoly decompress(const MPoly& ct, unsigned k, unsigned p_unused = 0);

struct ProfilePart {
  MPoly factor;  // primitive, positive leading coefficient
  unsigned multiplicity = 1;
  unsigned degree = 0;  // degree in the profile's kept variable
};

/// A resultant split into trivial factors and refined squarefree parts.
struct ResultantProfile {
  unsigned p = 0;
  std::string eliminated, kept;
  bool compressed = false;
  BigInt content;            // full signed integer content of the resultant
  unsigned content_pow2 = 0;  // 2-adic valuation of |content|
  unsigned monomial_power = 0;
  unsigned cyclotomic_power = 0;  // exponent of (t^4 - 1), or (s - 1) for s
  std::string cyclotomic_kind;    // "t4m1" or "sm1"
  std::vector<ProfilePart> parts;  // sorted by (multiplicity, degree)
  bool verified = false;  // re-expansion against the exact resultant passed

  /// Multiplies content, trivials and parts back together.
  MPoly reexpand() const;
};

/// Shared per-p computation cache: the reduction pair, compressed pair and
/// both elimination resultants, computed on demand.
class ProfileSession {
 public:
  ProfileSession(unsigned p, bool compressed, int workers = 0);

  unsigned p() const { return p_; }
  bool compressed() const { return compressed_; }
  const ReductionPair& pair();
  const CompressedPair& cpair();

  /// Profile for eliminating `var` ("u"/"v" uncompressed, "s"/"w"
  /// compressed). The kept variable's resultant is stripped, decomposed and
  /// refined; the result is re-expansion-verified.
  const ResultantProfile& profile(const std::string& eliminate);

  /// Exact resultant eliminating `var` (cached).
  const MPoly& raw_resultant(const std::string& eliminate);

 private:
  unsigned p_;
  bool compressed_;
  int workers_;
  std::optional<ReductionPair> pair_;
  std::optional<CompressedPair> cpair_;
  std::optional<MPoly> res_elim_first_, res_elim_second_;
  std::optional<ResultantProfile> prof_first_, prof_second_;

  std::pair<std::string, std::string> var_names() const;  // (alpha, beta)
  const MPoly& poly0();
  const MPoly& poly1();
  MPoly p0_, p1_;
  bool polys_ready_ = false;
};

/// Nontrivial coordinate counts: sum of part degrees without multiplicity.
std::pair<unsigned, unsigned> coordinate_counts(const ResultantProfile& u_side,
                                                const ResultantProfile& v_side);

struct IntersectionBound {
  unsigned u_count = 0, v_count = 0;
  unsigned multiplicity = 0;   // ceil(v_count / u_count)
  unsigned cardinality = 0;    // 6 + 4 + 4 * multiplicity
};

IntersectionBound pigeonhole_bound(unsigned u_count, unsigned v_count);

/// The two roots of 2u^3 d^2 + (u^4-1) d - 2u = 0, as certified balls.
/// Preconditions (checked, each with a named error): u^4 not in {0, 1} and
/// u^8 + 14u^4 + 1 != 0, beyond the ball radii.
std::pair<ComplexBall, ComplexBall> delta_pair_from_u(const ComplexBall& u);

}  // namespace ecint
