#pragma once

#include <vector>

#include "ecint/mpoly.hpp"
#include "ecint/real.hpp"

namespace ecint {

/// All complex roots of a squarefree exact univariate polynomial, as
/// pairwise-disjoint balls each containing exactly one root.
///
/// Simultaneous Ehrlich-Aberth iteration seeds the roots, Newton polishing
/// sharpens them at full precision, and the returned radii come from the
/// n*|f(z)|/|f'(z)| inclusion-disk bound. Results are sorted by midpoint
/// (real part, then imaginary part).
std::vector<ComplexBall> roots_univariate(const MPoly& f, mpfr_prec_t precision);

/// Root finder on plain complex coefficients (no certification); used by the
/// oracle and fiber solvers. Coefficients index = degree, lc != 0.
std::vector<Complex> roots_complex(const std::vector<Complex>& coeffs, mpfr_prec_t precision);

}  // namespace ecint
