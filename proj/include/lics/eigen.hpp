#pragma once

#include <vector>

#include "lics/cmatrix.hpp"

namespace lics {

struct EigenSystem {
  /// Sorted by real part, ties broken by imaginary part.
  std::vector<cplx> values;
  /// Column k is a unit right eigenvector for values[k].
  CMatrix vectors{1};
  /// True when the eigenvectors do not span the space (defective matrix).
  /// The eigenvalues are still valid.
  bool degenerate = false;
};

/// Eigenvalues of a 1x1..4x4 matrix. 2x2 uses the closed-form quadratic,
/// larger sizes the roots of the characteristic polynomial refined against
/// the matrix itself.
std::vector<cplx> eigenvalues(const CMatrix& m);

/// Eigenvalues plus right eigenvectors.
EigenSystem eigensystem(const CMatrix& m);

}  // namespace lics
