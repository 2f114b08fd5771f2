#include "lics/analytic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lics/errors.hpp"
#include "lics/state.hpp"

namespace lics {

namespace {

constexpr cplx kI{0.0, 1.0};

void require_trapping(const Params& p) {
  p.validate();
  const double trap = trapping_delta(p);
  if (!(std::abs(p.delta - trap) <= kTrapTolerance))
    throw PreconditionError("closed-form solution needs delta on the trapping manifold (delta = " +
                            std::to_string(p.delta) + ", trap = " + std::to_string(trap) + ")");
}

}  // namespace

double trapping_delta(const Params& p) {
  return 0.5 * (p.gamma_e * p.q_ee - p.gamma_g * p.q_gg) + p.q_eg * (p.gamma_g - p.gamma_e) + p.stark_g -
         p.stark_e;
}

BrightAmplitudes analytic_bright(const Params& p, double t) {
  require_trapping(p);
  const double ge = p.gamma_e, gg = p.gamma_g, sum = ge + gg;
  if (sum == 0.0) {
    const cplx phase = std::exp(-kI * p.stark_g * t);
    return {phase, 0.0};
  }
  const cplx decay = std::exp(kI * t * (p.q_eg + kI) * sum);
  const cplx phase = std::exp(-0.5 * kI * t * (gg * (2.0 * p.q_eg - p.q_gg) + 2.0 * p.stark_g));
  return {(ge + gg * decay) * phase / sum, std::sqrt(ge * gg) * (decay - 1.0) * phase / sum};
}

GroundAmplitudes analytic_g1(const Params& p, double t) {
  const BrightAmplitudes b = analytic_bright(p, t);
  const double r = kInvSqrt2;
  const cplx d_g = -std::exp(-0.5 * kI * t * (2.0 * p.stark_g + p.gamma_g * p.q_gg)) * r;
  return {b.b_g * r, b.b_e * r, d_g};
}

}  // namespace lics
