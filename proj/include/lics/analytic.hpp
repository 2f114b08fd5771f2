#pragma once

#include "lics/cmatrix.hpp"
#include "lics/model.hpp"

namespace lics {

/// Detuning at which the bright block has a real eigenvalue:
/// Δ = (Γe q_ee - Γg q_gg)/2 + q_eg (Γg - Γe) + δS_g - δS_e. p.delta is ignored.
double trapping_delta(const Params& p);

/// Largest |p.delta - trapping_delta(p)| accepted by the closed forms.
inline constexpr double kTrapTolerance = 1e-9;

struct BrightAmplitudes {
  cplx b_g;
  cplx b_e;
};

struct GroundAmplitudes {
  cplx b_g;
  cplx b_e;
  cplx d_g;
};

/// Closed-form bright amplitudes for b_g(0) = 1, valid only on the trapping
/// manifold (PreconditionError otherwise).
BrightAmplitudes analytic_bright(const Params& p, double t);

/// Closed form for c_g1(0) = 1: the bright pair scaled by 1/√2 plus the
/// ground dark amplitude, which only acquires a phase.
GroundAmplitudes analytic_g1(const Params& p, double t);

}  // namespace lics
