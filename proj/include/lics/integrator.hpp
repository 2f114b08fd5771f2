#pragma once

#include <cstddef>

#include "lics/cmatrix.hpp"
#include "lics/propagate.hpp"
#include "lics/state.hpp"

namespace lics {

struct IntegratorStats {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
};

/// Solves i dc/dt = H c with the Dormand-Prince 5(4) pair under PI step
/// control (absolute and relative tolerance both `tol`; steps target a
/// quarter of it in the max norm over components). Grid samples come
/// from the pair's 4th-order continuous extension, so the step size is not
/// tied to the output grid.
///
/// Throws PreconditionError if tol is outside [1e-13, 1e-3] and
/// IntegrationError if the step size underflows 1e-14 of the span.
Trajectory integrate(const CMatrix& h, const State& s0, const TimeGrid& grid, double tol,
                     IntegratorStats* stats = nullptr);

}  // namespace lics
