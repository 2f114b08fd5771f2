#pragma once

#include <span>
#include <vector>

#include "lics/cmatrix.hpp"

namespace lics {

/// Evaluates Σ coeffs[k] z^k (ascending order) by Horner's rule.
cplx poly_eval(std::span<const cplx> coeffs, cplx z);

/// Σ |coeffs[k]| |z|^k, the scale of the rounding error in poly_eval.
double poly_magnitude(std::span<const cplx> coeffs, cplx z);

/// All roots of a polynomial with ascending coefficients and non-zero leading
/// coefficient, found simultaneously with the Aberth-Ehrlich iteration and
/// polished by Newton steps until |p(z)| <= rel_tol * poly_magnitude(z) or no
/// further progress is made.
std::vector<cplx> poly_roots(std::span<const cplx> coeffs, double rel_tol = 1e-12);

/// Coefficients of det(λI - M) in ascending order (monic, size dim+1), by the
/// Faddeev-LeVerrier recursion.
std::vector<cplx> characteristic_polynomial(const CMatrix& m);

}  // namespace lics
