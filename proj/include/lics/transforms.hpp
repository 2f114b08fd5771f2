#pragma once

#include <numbers>

#include "lics/cmatrix.hpp"
#include "lics/state.hpp"

namespace lics {

/// The only angle at which the degenerate Hamiltonian decouples.
inline constexpr double kDecouplingAngle = std::numbers::pi / 4.0;

/// U = diag(R(θ), R(θ)) with R = [[cos θ, sin θ], [-sin θ, cos θ]].
CMatrix rotation(double theta);

/// Permutation that swaps the 2nd and 3rd components. Its own inverse.
CMatrix shift_permutation();

struct BlockSplit {
  CMatrix bright{2};
  CMatrix dark{2};
  double residual = 0.0;  // max-abs over the two off-diagonal 2x2 blocks
};

/// Forms P U H U† P and splits it into its diagonal 2x2 blocks. The residual
/// is reported, not checked: the non-degenerate Hamiltonian does not decouple.
BlockSplit block_diagonalize(const CMatrix& h, double theta = kDecouplingAngle);

/// (c_g1, c_g2, c_e1, c_e2) -> (b_g, b_e, d_g, d_e).
State to_bright_dark(const State& s);
/// Inverse of to_bright_dark.
State from_bright_dark(const State& s);

}  // namespace lics
