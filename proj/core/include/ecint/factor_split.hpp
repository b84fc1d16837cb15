#pragma once

#include <string>
#include <vector>

#include "ecint/mpoly.hpp"

namespace ecint {

struct SplitBudget {
  unsigned max_factor_degree = 100;   // only hunt for factors up to this degree
  std::size_t max_subsets = 2000000;  // recombination attempt cap
  int prime_candidates = 10;          // factorization primes to audition
};

struct SmallFactorSplit {
  std::vector<MPoly> factors;  // primitive, positive lc, canonical order
  MPoly cofactor;              // what remains after dividing the factors out
  bool complete = true;        // false if the subset cap was hit
};

/// Extracts every irreducible factor of degree <= budget.max_factor_degree
/// from a squarefree primitive univariate polynomial (Zassenhaus-style:
/// modular factorization, Hensel lifting, bounded recombination).
/// Factors of larger degree are left merged inside `cofactor`.
SmallFactorSplit split_small_factors(const MPoly& f, const std::string& var,
                                     const SplitBudget& budget = SplitBudget());

}  // namespace ecint
