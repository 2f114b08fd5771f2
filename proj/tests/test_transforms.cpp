#include <cmath>
#include <numbers>

#include "doctest.h"
#include "lics/eigen.hpp"
#include "lics/errors.hpp"
#include "lics/model.hpp"
#include "lics/transforms.hpp"
#include "support.hpp"

using namespace lics;

TEST_CASE("rotation") {
  CHECK((rotation(0.0) - CMatrix::identity(4)).max_abs() == 0.0);

  const CMatrix u = rotation(kDecouplingAngle);
  const double r = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const bool same_block = (i < 2) == (j < 2);
      if (same_block)
        CHECK(std::abs(std::abs(u(i, j)) - r) < 2e-16);
      else
        CHECK(u(i, j) == cplx{});
    }
  CHECK(u(1, 0).real() < 0.0);  // R = [[c, s], [-s, c]]

  CHECK((rotation(0.3) * rotation(0.3).adjoint() - CMatrix::identity(4)).max_abs() < 1e-15);
  testing::ParamGen gen(3);
  for (int i = 0; i < 200; ++i) {
    const CMatrix v = rotation(gen.uniform(-10.0, 10.0));
    CHECK((v * v.adjoint() - CMatrix::identity(4)).max_abs() < 1e-15);
  }
}

TEST_CASE("shift permutation") {
  const CMatrix p = shift_permutation();
  const cplx x[4] = {1.0, 2.0, 3.0, 4.0};
  cplx y[4];
  p.apply(x, y);
  CHECK(y[0] == 1.0);
  CHECK(y[1] == 3.0);
  CHECK(y[2] == 2.0);
  CHECK(y[3] == 4.0);
  CHECK(p * p == CMatrix::identity(4));
  for (std::size_t i = 0; i < 4; ++i) {
    int row_ones = 0, col_ones = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      row_ones += p(i, j) == 1.0;
      col_ones += p(j, i) == 1.0;
      CHECK((p(i, j) == 1.0 || p(i, j) == 0.0));
    }
    CHECK(row_ones == 1);
    CHECK(col_ones == 1);
  }
}

TEST_CASE("block diagonalization reproduces the bright and dark blocks") {
  Params p = reference_params();
  p.delta = 0.809;
  const BlockSplit split = block_diagonalize(effective_hamiltonian(p));
  CHECK(split.residual < 1e-13);
  CHECK((split.bright - bright_hamiltonian(p)).max_abs() < 1e-13);
  CHECK((split.dark - dark_hamiltonian(p)).max_abs() < 1e-13);
}

TEST_CASE("block diagonalization of the identity") {
  const BlockSplit split = block_diagonalize(CMatrix::identity(4));
  CHECK(split.residual < 2e-16);
  CHECK((split.bright - CMatrix::identity(2)).max_abs() < 1e-15);
  CHECK((split.dark - CMatrix::identity(2)).max_abs() < 1e-15);
}

TEST_CASE("non-degenerate splitting leaks across the blocks") {
  // diag(0, δ) rotated by π/4 has off-diagonal δ/2, which the permutation
  // moves into the bright/dark coupling block.
  const BlockSplit split = block_diagonalize(nondegenerate_hamiltonian(split_reference_params()));
  CHECK(std::abs(split.residual - 0.1) < 1e-14);
}

TEST_CASE("π/4 is the decoupling angle") {
  const CMatrix h = effective_hamiltonian(reference_params());
  const double at_quarter = block_diagonalize(h, kDecouplingAngle).residual;
  for (double theta : {0.0, 0.3, 0.7, 0.78, 0.79, 1.2})
    CHECK(block_diagonalize(h, theta).residual > at_quarter + 1e-3);
}

TEST_CASE("block_diagonalize needs a 4x4 matrix") {
  CHECK_THROWS_AS(block_diagonalize(CMatrix::identity(2)), UsageError);
}

TEST_CASE("property: residual vanishes and spectrum is preserved") {
  testing::ParamGen gen(7);
  for (int i = 0; i < 1000; ++i) {
    const Params p = gen();
    const CMatrix h = effective_hamiltonian(p);
    const BlockSplit split = block_diagonalize(h);
    CHECK(split.residual < 1e-12 * h.frobenius());

    if (i % 10 == 0) {
      const CMatrix u = rotation(kDecouplingAngle);
      const CMatrix ht = shift_permutation() * u * h * u.adjoint() * shift_permutation();
      const auto a = eigenvalues(h);
      const auto b = eigenvalues(ht);
      for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(a[k] - b[k]) < 1e-10 * std::max(1.0, h.max_abs()));
    }
  }
}

TEST_CASE("state mapping to bright/dark amplitudes") {
  const double r = 1.0 / std::sqrt(2.0);
  const cplx g1[4] = {1.0, 0.0, 0.0, 0.0};
  const State bd = to_bright_dark(State(Basis::original4, g1));
  CHECK(bd.basis() == Basis::brightdark4);
  CHECK(std::abs(bd[0] - r) < 2e-16);
  CHECK(bd[1] == cplx{});
  CHECK(std::abs(bd[2] + r) < 2e-16);
  CHECK(bd[3] == cplx{});

  const cplx bright[4] = {r, r, 0.0, 0.0};
  const State b = to_bright_dark(State(Basis::original4, bright));
  CHECK(std::abs(b[0] - 1.0) < 1e-15);
  CHECK(std::abs(b[2]) < 2e-16);

  const cplx dark_e[4] = {0.0, 0.0, r, -r};
  const State d = to_bright_dark(State(Basis::original4, dark_e));
  CHECK(std::abs(d[3] + 1.0) < 1e-15);
  CHECK(std::abs(d[1]) < 2e-16);
}

TEST_CASE("inverse mapping") {
  const double r = 1.0 / std::sqrt(2.0);
  const cplx bg[4] = {1.0, 0.0, 0.0, 0.0};
  const State o = from_bright_dark(State(Basis::brightdark4, bg));
  CHECK(o.basis() == Basis::original4);
  CHECK(std::abs(o[0] - r) < 2e-16);
  CHECK(std::abs(o[1] - r) < 2e-16);

  const cplx be[4] = {0.0, 1.0, 0.0, 0.0};
  const State e = from_bright_dark(State(Basis::brightdark4, be));
  CHECK(std::abs(e[2] - r) < 2e-16);
  CHECK(std::abs(e[3] - r) < 2e-16);
  CHECK(e[0] == cplx{});
}

TEST_CASE("mapping requires the right basis") {
  CHECK_THROWS_AS(to_bright_dark(State(Basis::brightdark4)), UsageError);
  CHECK_THROWS_AS(from_bright_dark(State(Basis::original4)), UsageError);
  CHECK_THROWS_AS(to_bright_dark(State(Basis::bright2)), UsageError);
}

TEST_CASE("property: mapping is unitary and inverted exactly") {
  testing::ParamGen gen(5);
  for (int i = 0; i < 1000; ++i) {
    const State s = gen.normalized_state(Basis::original4);
    const State bd = to_bright_dark(s);
    CHECK(std::abs(bd.norm2() - s.norm2()) < 1e-15);
    CHECK(testing::max_abs_diff(from_bright_dark(bd), s) < 1e-15);
    const State back = to_bright_dark(from_bright_dark(bd));
    CHECK(testing::max_abs_diff(back, bd) < 1e-15);
  }
}
