#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ecint/bigint.hpp"

namespace ecint {

/// Maximum number of distinct variables a single polynomial may carry.
inline constexpr std::size_t kMaxVars = 4;

using ExpVec = std::array<uint32_t, kMaxVars>;

/// Position of a variable name in the module-wide canonical order.
/// Known names come first in a fixed priority; unknown names sort after,
/// alphabetically.
int var_priority(const std::string& name);

/// Sparse multivariate polynomial over BigInt coefficients.
///
/// Terms are kept in graded-lexicographic descending order with respect to
/// the polynomial's ordered variable list; no zero coefficients and no
/// duplicate exponent vectors are ever stored.
class MPoly {
 public:
  struct Term {
    ExpVec e{};  // exponents, aligned with vars(); unused slots zero
    BigInt c;
  };

  MPoly() = default;  // zero polynomial, empty variable list

  static MPoly constant(BigInt c);
  static MPoly variable(const std::string& name, uint32_t exp = 1);
  static MPoly monomial(BigInt c, const std::vector<std::pair<std::string, uint32_t>>& pows);
  /// Build from raw (vars, terms); terms get sorted/merged/cleaned.
  static MPoly from_terms(std::vector<std::string> vars, std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && total_deg(terms_[0].e) == 0); }
  /// Constant term value (the coefficient of the all-zero monomial).
  BigInt constant_value() const;

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  /// Total degree; nullopt for the zero polynomial (distinguished sentinel).
  std::optional<uint32_t> total_degree() const;
  /// Degree in one variable; nullopt for the zero polynomial; 0 if var absent.
  std::optional<uint32_t> degree(const std::string& var) const;
  uint32_t degree_or_zero(const std::string& var) const { return degree(var).value_or(0); }

  /// Leading coefficient in the canonical term order.
  const BigInt& lc() const;
  /// Variables that actually occur with a positive exponent.
  std::vector<std::string> effective_vars() const;

  MPoly operator-() const;
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator*(const BigInt& k) const;
  bool operator==(const MPoly& o) const;
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  MPoly pow(unsigned long e) const;

  MPoly derivative(const std::string& var) const;

  /// Coefficient of var^k, as a polynomial (var keeps exponent 0 in it).
  MPoly coeff_of(const std::string& var, uint32_t k) const;
  /// Dense coefficient list in var: index k holds the coefficient of var^k.
  std::vector<MPoly> univariate_coeffs(const std::string& var) const;
  static MPoly from_univariate_coeffs(const std::string& var, const std::vector<MPoly>& coeffs);

  /// Dense BigInt coefficient vector; requires effective_vars() <= {var}.
  std::vector<BigInt> dense_univariate(const std::string& var) const;
  static MPoly from_dense_univariate(const std::string& var, const std::vector<BigInt>& coeffs);

  /// gcd of all |coefficients| (0 for the zero polynomial).
  BigInt content() const;
  int lc_sign() const;  // sign of leading coefficient; +1 for zero poly
  struct ContentPrimitive;
  ContentPrimitive content_primitive() const;
  MPoly primitive_part() const;

  /// Exact division; nullopt if the divisor does not divide exactly.
  std::optional<MPoly> divide_exact(const MPoly& g) const;

  /// Plain substitution var := value.
  MPoly substitute(const std::string& var, const MPoly& value) const;
  /// Denominator-cleared substitution: returns den^(deg_var f) * f(num/den).
  MPoly substitute_rational(const std::string& var, const MPoly& num, const MPoly& den) const;

  /// Exact evaluation at integer points for every variable.
  BigInt eval(const std::map<std::string, BigInt>& point) const;

  std::string to_string() const;           // single line, " + " separated terms
  std::vector<std::string> to_lines() const;  // one term per line (file format)
  static MPoly parse(const std::string& text);  // accepts both renderings

  /// Total order for deterministic container sorting (not algebraic).
  static bool canonical_less(const MPoly& a, const MPoly& b);

  static uint32_t total_deg(const ExpVec& e);

 private:
  std::vector<std::string> vars_;
  std::vector<Term> terms_;

  void normalize();  // sort desc, merge, drop zeros
  friend void align_vars(MPoly& a, MPoly& b);
};

struct MPoly::ContentPrimitive {
  BigInt content;   // >= 0
  MPoly primitive;  // positive leading coefficient
  int sign;         // f == sign * content * primitive
};

inline MPoly MPoly::primitive_part() const { return content_primitive().primitive; }

/// Rewrites both polynomials over the merged, canonically ordered var list.
void align_vars(MPoly& a, MPoly& b);

inline MPoly operator*(const BigInt& k, const MPoly& f) { return f * k; }

}  // namespace ecint
