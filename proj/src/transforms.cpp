#include "lics/transforms.hpp"

#include <algorithm>
#include <cmath>

#include "lics/errors.hpp"

namespace lics {

CMatrix rotation(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return CMatrix(4, {c, s, 0, 0,
                     -s, c, 0, 0,
                     0, 0, c, s,
                     0, 0, -s, c});
}

CMatrix shift_permutation() {
  return CMatrix(4, {1, 0, 0, 0,
                     0, 0, 1, 0,
                     0, 1, 0, 0,
                     0, 0, 0, 1});
}

BlockSplit block_diagonalize(const CMatrix& h, double theta) {
  if (h.dim() != 4) throw UsageError("block_diagonalize needs a 4x4 matrix");
  const CMatrix u = rotation(theta);
  const CMatrix p = shift_permutation();
  const CMatrix t = p * u * h * u.adjoint() * p;

  BlockSplit out;
  double residual = 0.0;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) {
      out.bright(r, c) = t(r, c);
      out.dark(r, c) = t(r + 2, c + 2);
      residual = std::max({residual, std::abs(t(r, c + 2)), std::abs(t(r + 2, c))});
    }
  out.residual = residual;
  return out;
}

State to_bright_dark(const State& s) {
  if (s.basis() != Basis::original4) throw UsageError("to_bright_dark expects an original4 state");
  const double r = kInvSqrt2;
  const cplx amps[4] = {r * (s[0] + s[1]), r * (s[2] + s[3]), r * (s[1] - s[0]), r * (s[3] - s[2])};
  return State(Basis::brightdark4, amps, s.time());
}

State from_bright_dark(const State& s) {
  if (s.basis() != Basis::brightdark4) throw UsageError("from_bright_dark expects a brightdark4 state");
  const double r = kInvSqrt2;
  const cplx amps[4] = {r * (s[0] - s[2]), r * (s[0] + s[2]), r * (s[1] - s[3]), r * (s[1] + s[3])};
  return State(Basis::original4, amps, s.time());
}

}  // namespace lics
