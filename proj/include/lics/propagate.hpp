#pragma once

#include <cstddef>
#include <vector>

#include "lics/cmatrix.hpp"
#include "lics/state.hpp"

namespace lics {

/// Uniform output grid over [t_start, t_end] (units of T).
struct TimeGrid {
  double t_start = 0.0;
  double t_end = 1.0;
  std::size_t n_samples = 2;

  /// Throws PreconditionError unless t_end > t_start, both finite, n_samples >= 2.
  void validate() const;
  /// Sample i; the last sample is exactly t_end.
  double at(std::size_t i) const noexcept;

  bool operator==(const TimeGrid&) const = default;
};

struct Trajectory {
  TimeGrid grid;
  /// One state per grid sample, in the model's natural basis.
  std::vector<State> states;
  /// For four-state models: the same states in the (g1, g2, e1, e2) basis. Empty otherwise.
  std::vector<State> original;
  std::vector<double> ionization;
};

/// exp(M) by scaling and squaring of a truncated Taylor series.
CMatrix expm(const CMatrix& m);

/// Above this 1-norm condition number of the eigenvector matrix the
/// propagator switches from the spectral route to expm.
inline constexpr double kMaxEigenvectorCondition = 1e8;

/// Exact evolution s(t) = exp(-i H (t - t_start)) s0 under a constant
/// Hamiltonian, evaluated independently at every grid sample.
Trajectory propagate_expm(const CMatrix& h, const State& s0, const TimeGrid& grid);

/// Final state only, at time t_end (s0 taken at t_start).
State propagate_to(const CMatrix& h, const State& s0, double t_start, double t_end);

}  // namespace lics
