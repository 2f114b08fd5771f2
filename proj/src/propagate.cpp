#include "lics/propagate.hpp"

#include <algorithm>
#include <cmath>

#include "lics/eigen.hpp"
#include "lics/errors.hpp"

namespace lics {

namespace {

constexpr cplx kI{0.0, 1.0};

// Spectral form of exp(-i H τ) s0: s(τ) = Σ_k v_k a_k e^{-i λ_k τ}, a = V⁻¹ s0.
class SpectralPropagator {
 public:
  SpectralPropagator(const CMatrix& h, const State& s0) : n_(h.dim()), vectors_(h.dim()) {
    const EigenSystem es = eigensystem(h);
    if (es.degenerate || !(condition1(es.vectors) <= kMaxEigenvectorCondition)) return;
    vectors_ = es.vectors;
    values_ = es.values;
    const CMatrix vinv = inverse(es.vectors);
    coeffs_.resize(n_);
    vinv.apply(s0.amps(), coeffs_);
    ok_ = true;
  }

  bool ok() const noexcept { return ok_; }

  void eval(double tau, std::span<cplx> out) const {
    std::fill(out.begin(), out.end(), cplx{});
    for (std::size_t k = 0; k < n_; ++k) {
      const cplx w = coeffs_[k] * std::exp(-kI * values_[k] * tau);
      for (std::size_t i = 0; i < n_; ++i) out[i] += vectors_(i, k) * w;
    }
  }

 private:
  std::size_t n_;
  CMatrix vectors_;
  std::vector<cplx> values_;
  std::vector<cplx> coeffs_;
  bool ok_ = false;
};

void check_dims(const CMatrix& h, const State& s0) {
  if (h.dim() != s0.size())
    throw UsageError("propagate: Hamiltonian is " + std::to_string(h.dim()) + "x" + std::to_string(h.dim()) +
                     " but state has " + std::to_string(s0.size()) + " amplitudes");
}

State advance(const CMatrix& h, const State& s0, const SpectralPropagator& sp, double tau, double t) {
  State s(s0.basis(), t);
  if (tau == 0.0) {
    std::copy(s0.amps().begin(), s0.amps().end(), s.amps().begin());
  } else if (sp.ok()) {
    sp.eval(tau, s.amps());
  } else {
    expm(-kI * tau * h).apply(s0.amps(), s.amps());
  }
  return s;
}

}  // namespace

void TimeGrid::validate() const {
  if (!std::isfinite(t_start) || !std::isfinite(t_end)) throw PreconditionError("time grid bounds must be finite");
  if (!(t_end > t_start)) throw PreconditionError("time grid needs t_end > t_start");
  if (n_samples < 2) throw PreconditionError("time grid needs at least 2 samples");
}

double TimeGrid::at(std::size_t i) const noexcept {
  if (i + 1 >= n_samples) return t_end;
  return t_start + (t_end - t_start) * static_cast<double>(i) / static_cast<double>(n_samples - 1);
}

CMatrix expm(const CMatrix& m) {
  const std::size_t n = m.dim();
  const double norm = m.norm1();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const CMatrix a = m * std::ldexp(1.0, -squarings);

  // Taylor series of exp(a) with ‖a‖₁ <= 1/2; 20 terms reach round-off.
  CMatrix result = CMatrix::identity(n);
  CMatrix term = CMatrix::identity(n);
  for (int k = 1; k <= 20; ++k) {
    term = term * a * (1.0 / k);
    result += term;
    if (term.max_abs() <= 1e-18 * result.max_abs()) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

Trajectory propagate_expm(const CMatrix& h, const State& s0, const TimeGrid& grid) {
  grid.validate();
  check_dims(h, s0);
  const SpectralPropagator sp(h, s0);

  Trajectory traj;
  traj.grid = grid;
  traj.states.reserve(grid.n_samples);
  traj.ionization.reserve(grid.n_samples);
  for (std::size_t i = 0; i < grid.n_samples; ++i) {
    const double t = grid.at(i);
    traj.states.push_back(advance(h, s0, sp, t - grid.t_start, t));
    traj.ionization.push_back(ionization(traj.states.back()));
  }
  return traj;
}

State propagate_to(const CMatrix& h, const State& s0, double t_start, double t_end) {
  check_dims(h, s0);
  const SpectralPropagator sp(h, s0);
  return advance(h, s0, sp, t_end - t_start, t_end);
}

}  // namespace lics
