#include "lics/model.hpp"

#include <cmath>
#include <string>

#include "lics/errors.hpp"

namespace lics {

namespace {

constexpr cplx kI{0.0, 1.0};

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) throw DomainError(std::string(name) + " must be finite");
}

}  // namespace

double Params::gamma_eg() const { return std::sqrt(gamma_g * gamma_e); }

void Params::validate() const {
  require_finite(gamma_g, "gamma_g");
  require_finite(gamma_e, "gamma_e");
  require_finite(stark_g, "stark_g");
  require_finite(stark_e, "stark_e");
  require_finite(q_gg, "q_gg");
  require_finite(q_ee, "q_ee");
  require_finite(q_eg, "q_eg");
  require_finite(delta, "delta");
  require_finite(shift_g, "shift_g");
  require_finite(shift_e, "shift_e");
  if (gamma_g < 0.0) throw DomainError("gamma_g must be non-negative");
  if (gamma_e < 0.0) throw DomainError("gamma_e must be non-negative");
}

Params reference_params() {
  Params p;
  p.gamma_g = 5.5;
  p.gamma_e = 12.74;
  p.stark_g = 0.5;
  p.stark_e = 0.6;
  p.q_gg = 2.3;
  p.q_eg = 3.4;
  p.q_ee = 5.0;
  return p;
}

Params split_reference_params() {
  Params p;
  p.gamma_g = 1.08;
  p.gamma_e = 2.09;
  p.stark_g = 0.33;
  p.stark_e = 0.26;
  p.shift_g = 0.2;
  p.shift_e = 0.2;
  p.q_gg = 2.3;
  p.q_eg = 2.4;
  p.q_ee = 2.5;
  return p;
}

CMatrix effective_hamiltonian(const Params& p) {
  p.validate();
  const double g = p.gamma_g;
  const double e = p.gamma_e;
  const double ge = p.gamma_eg();

  // H0 and H1 exactly as the two real matrices; H = -(H0 + i H1) / 2.
  const double dg = -2.0 * p.stark_g;
  const double de = -2.0 * (p.delta + p.stark_e);
  const CMatrix h0(4, {dg, p.q_gg * g, p.q_eg * ge, p.q_eg * ge,
                       p.q_gg * g, dg, p.q_eg * ge, p.q_eg * ge,
                       p.q_eg * ge, p.q_eg * ge, de, p.q_ee * e,
                       p.q_eg * ge, p.q_eg * ge, p.q_ee * e, de});
  const CMatrix h1(4, {g, g, ge, ge,
                       g, g, ge, ge,
                       ge, ge, e, e,
                       ge, ge, e, e});
  return -0.5 * (h0 + kI * h1);
}

CMatrix bright_hamiltonian(const Params& p) {
  p.validate();
  const cplx coupling = -(p.q_eg + kI) * p.gamma_eg();
  return CMatrix(2, {p.stark_g - 0.5 * (p.q_gg + 2.0 * kI) * p.gamma_g, coupling,
                     coupling, p.delta + p.stark_e - 0.5 * (p.q_ee + 2.0 * kI) * p.gamma_e});
}

CMatrix dark_hamiltonian(const Params& p) {
  p.validate();
  return CMatrix(2, {0.5 * p.q_gg * p.gamma_g + p.stark_g, 0.0,
                     0.0, p.delta + 0.5 * p.q_ee * p.gamma_e + p.stark_e});
}

CMatrix two_level_hamiltonian(const Params& p) {
  p.validate();
  const cplx coupling = -0.5 * (p.q_eg + kI) * p.gamma_eg();
  return CMatrix(2, {p.stark_g - 0.5 * kI * p.gamma_g, coupling,
                     coupling, p.delta + p.stark_e - 0.5 * kI * p.gamma_e});
}

CMatrix nondegenerate_hamiltonian(const Params& p) {
  p.validate();
  const cplx diag_g = p.stark_g - 0.5 * kI * p.gamma_g;
  const cplx diag_e = p.delta + p.stark_e - 0.5 * kI * p.gamma_e;
  const cplx gg = -0.5 * (p.q_gg + kI) * p.gamma_g;
  const cplx ee = -0.5 * (p.q_ee + kI) * p.gamma_e;
  const cplx eg = -0.5 * (p.q_eg + kI) * p.gamma_eg();
  return CMatrix(4, {diag_g, gg, eg, eg,
                     gg, diag_g + p.shift_g, eg, eg,
                     eg, eg, diag_e, ee,
                     eg, eg, ee, diag_e + p.shift_e});
}

}  // namespace lics
