#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ecint/modular.hpp"
#include "ecint/mpoly.hpp"

namespace ecint {

struct PseudoDivRem {
  MPoly quotient;
  MPoly remainder;
  unsigned scale_power;  // lc(g)^scale_power * f == quotient*g + remainder
};

/// Pseudo-division of f by g in the given variable, exact integer arithmetic:
/// lc_var(g)^k * f = q*g + r with deg_var(r) < deg_var(g).
PseudoDivRem pseudo_divrem(const MPoly& f, const MPoly& g, const std::string& var);

/// Greatest common divisor, primitive with positive leading coefficient.
MPoly gcd_poly(const MPoly& f, const MPoly& g);

struct SquarefreeDecomposition {
  int unit_sign = 1;
  BigInt content = 1;
  /// (primitive squarefree factor, multiplicity), multiplicities increasing.
  std::vector<std::pair<MPoly, unsigned>> factors;

  MPoly reexpand() const;
};

/// Yun's algorithm; f must be nonzero and univariate (one effective variable).
SquarefreeDecomposition squarefree_decompose(const MPoly& f);

/// Reduce f mod `prime` and evaluate the assigned variables. At most one
/// variable may remain unassigned; the result is either a residue (all
/// assigned) or the dense univariate image in the remaining variable.
struct EvalModResult {
  bool is_residue = true;
  uint64_t residue = 0;    // plain form
  std::string var;          // set when !is_residue
  std::vector<uint64_t> image;  // plain form, index = exponent
};
EvalModResult eval_mod(const MPoly& f, const std::map<std::string, uint64_t>& assignments,
                       uint64_t prime);

/// Univariate content/primitive helpers used by Yun and the profiles.
MPoly primitive_positive(const MPoly& f);

}  // namespace ecint
