#include "lics/integrator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "lics/errors.hpp"

namespace lics {

namespace {

using Vec = std::array<cplx, kMaxDim>;

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192, a75 = -2187.0 / 6784,
                 a76 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;
// Continuous extension.
constexpr double d1 = -12715105075.0 / 11282082432, d3 = 87487479700.0 / 32700410799,
                 d4 = -10690763975.0 / 1880347072, d5 = 701980252875.0 / 199316789632,
                 d6 = -1453857185.0 / 822651844, d7 = 69997945.0 / 29380423;

// PI controller constants.
constexpr double kSafety = 0.9;
constexpr double kBeta = 0.04;
constexpr double kExpo = 0.2 - kBeta * 0.75;
constexpr double kFacMin = 0.2;  // smallest step ratio h_new / h
constexpr double kFacMax = 10.0;
constexpr std::size_t kMaxSteps = 10'000'000;
// Steps aim at this fraction of tol so the accumulated error over a typical
// run stays within a small multiple of tol.
constexpr double kTarget = 0.25;

class Rhs {
 public:
  explicit Rhs(const CMatrix& h) : h_(h), n_(h.dim()) {}
  std::size_t dim() const noexcept { return n_; }

  // f(c) = -i H c
  void operator()(const Vec& c, Vec& out) const {
    for (std::size_t r = 0; r < n_; ++r) {
      cplx s = 0.0;
      for (std::size_t k = 0; k < n_; ++k) s += h_(r, k) * c[k];
      out[r] = cplx(s.imag(), -s.real());
    }
  }

 private:
  const CMatrix& h_;
  std::size_t n_;
};

}  // namespace

Trajectory integrate(const CMatrix& h, const State& s0, const TimeGrid& grid, double tol,
                     IntegratorStats* stats) {
  grid.validate();
  if (!(tol >= 1e-13 && tol <= 1e-3)) throw PreconditionError("integrate: tol must lie in [1e-13, 1e-3]");
  if (h.dim() != s0.size()) throw UsageError("integrate: Hamiltonian and state dimensions differ");

  const Rhs f(h);
  const std::size_t n = f.dim();
  const double span = grid.t_end - grid.t_start;
  const double h_min = 1e-14 * span;

  Trajectory traj;
  traj.grid = grid;
  traj.states.reserve(grid.n_samples);
  traj.ionization.reserve(grid.n_samples);
  auto emit = [&](double t, const Vec& c) {
    State s(s0.basis(), std::span<const cplx>(c.data(), n), t);
    traj.ionization.push_back(ionization(s));
    traj.states.push_back(s);
  };

  Vec y{};
  std::copy(s0.amps().begin(), s0.amps().end(), y.begin());
  emit(grid.t_start, y);
  std::size_t next = 1;

  Vec k1{}, k2{}, k3{}, k4{}, k5{}, k6{}, k7{}, tmp{}, y1{}, err{};
  f(y, k1);

  const double hnorm = h.norm1();
  double step = std::min(span, (hnorm > 0.0) ? 0.1 / hnorm : span);
  double t = grid.t_start;
  double fac_old = 1e-4;
  bool last_rejected = false;
  std::size_t accepted = 0, rejected = 0;

  while (next < grid.n_samples) {
    if (accepted + rejected > kMaxSteps) throw IntegrationError("integrate: step budget exhausted");
    if (step < h_min) throw IntegrationError("integrate: step size underflow at t = " + std::to_string(t));
    if (t + step > grid.t_end) step = grid.t_end - t;

    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + step * a21 * k1[i];
    f(tmp, k2);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + step * (a31 * k1[i] + a32 * k2[i]);
    f(tmp, k3);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + step * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    f(tmp, k4);
    for (std::size_t i = 0; i < n; ++i)
      tmp[i] = y[i] + step * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    f(tmp, k5);
    for (std::size_t i = 0; i < n; ++i)
      tmp[i] = y[i] + step * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    f(tmp, k6);
    for (std::size_t i = 0; i < n; ++i)
      y1[i] = y[i] + step * (a71 * k1[i] + a73 * k3[i] + a74 * k4[i] + a75 * k5[i] + a76 * k6[i]);
    f(y1, k7);
    for (std::size_t i = 0; i < n; ++i)
      err[i] = step * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);

    // Max over components of |err| / (atol + rtol * |y|): every amplitude's
    // local error stays within tol.
    double enorm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double sk = kTarget * tol * (1.0 + std::max(std::abs(y[i]), std::abs(y1[i])));
      enorm = std::max(enorm, std::abs(err[i]) / sk);
    }

    const double fac11 = std::pow(std::max(enorm, 1e-300), kExpo);
    if (enorm <= 1.0) {
      double fac = fac11 / std::pow(fac_old, kBeta);
      fac = std::clamp(fac / kSafety, 1.0 / kFacMax, 1.0 / kFacMin);
      fac_old = std::max(enorm, 1e-4);

      const double t_new = (step == grid.t_end - t) ? grid.t_end : t + step;
      // Dense output on [t, t_new].
      std::array<Vec, 5> rc{};
      for (std::size_t i = 0; i < n; ++i) {
        const cplx ydiff = y1[i] - y[i];
        const cplx bspl = step * k1[i] - ydiff;
        rc[0][i] = y[i];
        rc[1][i] = ydiff;
        rc[2][i] = bspl;
        rc[3][i] = ydiff - step * k7[i] - bspl;
        rc[4][i] = step * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] + d6 * k6[i] + d7 * k7[i]);
      }
      while (next < grid.n_samples && grid.at(next) <= t_new) {
        const double ts = grid.at(next);
        Vec out{};
        if (ts == t_new) {
          out = y1;
        } else {
          const double th = (ts - t) / step;
          const double th1 = 1.0 - th;
          for (std::size_t i = 0; i < n; ++i)
            out[i] = rc[0][i] + th * (rc[1][i] + th1 * (rc[2][i] + th * (rc[3][i] + th1 * rc[4][i])));
        }
        emit(ts, out);
        ++next;
      }

      y = y1;
      k1 = k7;
      t = t_new;
      double step_new = step / fac;
      if (last_rejected) step_new = std::min(step_new, step);
      last_rejected = false;
      step = step_new;
      ++accepted;
    } else {
      step /= std::min(1.0 / kFacMin, fac11 / kSafety);
      last_rejected = true;
      ++rejected;
    }
  }

  if (stats) {
    stats->accepted = accepted;
    stats->rejected = rejected;
  }
  return traj;
}

}  // namespace lics
