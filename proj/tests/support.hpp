#pragma once

// Shared fixtures for the test binaries: seeded parameter generators and
// small comparison helpers. Nothing here calls into the code under test
// beyond the Params/State value types.

#include <algorithm>
#include <cmath>
#include <random>

#include "lics/analytic.hpp"
#include "lics/model.hpp"
#include "lics/state.hpp"

namespace lics::testing {

/// Random physical parameters: Γ ∈ (0, 20], q ∈ [-10, 10], δS ∈ [-5, 5],
/// Δ ∈ [-20, 20], shifts zero.
class ParamGen {
 public:
  explicit ParamGen(std::uint64_t seed) : rng_(seed) {}

  Params operator()() {
    std::uniform_real_distribution<double> rate(0.0, 20.0), q(-10.0, 10.0), stark(-5.0, 5.0), det(-20.0, 20.0);
    Params p;
    p.gamma_g = 20.0 - rate(rng_);  // (0, 20]
    p.gamma_e = 20.0 - rate(rng_);
    p.q_gg = q(rng_);
    p.q_ee = q(rng_);
    p.q_eg = q(rng_);
    p.stark_g = stark(rng_);
    p.stark_e = stark(rng_);
    p.delta = det(rng_);
    return p;
  }

  /// Rates kept small enough that ‖H‖·T stays moderate for time-domain tests.
  Params moderate() {
    std::uniform_real_distribution<double> rate(0.0, 3.0), q(-3.0, 3.0), stark(-2.0, 2.0), det(-5.0, 5.0);
    Params p;
    p.gamma_g = 3.0 - rate(rng_);
    p.gamma_e = 3.0 - rate(rng_);
    p.q_gg = q(rng_);
    p.q_ee = q(rng_);
    p.q_eg = q(rng_);
    p.stark_g = stark(rng_);
    p.stark_e = stark(rng_);
    p.delta = det(rng_);
    return p;
  }

  State normalized_state(Basis b) {
    std::normal_distribution<double> n(0.0, 1.0);
    State s(b);
    double norm = 0.0;
    for (auto& a : s.amps()) {
      a = {n(rng_), n(rng_)};
      norm += std::norm(a);
    }
    for (auto& a : s.amps()) a /= std::sqrt(norm);
    return s;
  }

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline Params at_trap(Params p) {
  p.delta = trapping_delta(p);
  return p;
}

inline double max_abs_diff(const State& a, const State& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace lics::testing
