#pragma once

#include <map>
#include <string>
#include <vector>

#include "ecint/modular.hpp"
#include "ecint/mpoly.hpp"

namespace ecint {

/// Exact resultant of f and g with respect to `var`.
///
/// Bivariate inputs above the size thresholds route to the modular
/// evaluation/interpolation/CRT path with a verification pass; everything
/// else goes through the direct subresultant PRS.
MPoly resultant(const MPoly& f, const MPoly& g, const std::string& var);

/// Direct subresultant-PRS resultant (Cohen 3.3.7), any number of variables.
MPoly resultant_prs(const MPoly& f, const MPoly& g, const std::string& var);

/// Modular bivariate engine. f, g must involve only {main, sec}.
struct ModularResultantRequest {
  MPoly f, g;
  std::string main;  // eliminated variable
  std::string sec;   // surviving variable
  /// Additional subresultant polynomial levels to interpolate (e.g. {1, 3});
  /// level k yields the k-th subresultant's coefficients as polynomials in sec.
  std::vector<int> levels;
  int workers = 0;  // 0 = hardware concurrency
};

struct ModularResultantResult {
  MPoly resultant;  // polynomial in sec
  /// level -> coefficients (index = power of main, size level+1);
  /// may be scaled by a polynomial unit relative to the determinant
  /// convention, consistent across the whole run.
  std::map<int, std::vector<MPoly>> subres;
  std::size_t primes_used = 0;
  std::size_t points_per_prime = 0;
};

ModularResultantResult modular_resultant(const ModularResultantRequest& req);

}  // namespace ecint
