#include "lics/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

#include "lics/eigen.hpp"
#include "lics/errors.hpp"

namespace lics {

double trapping_residual(const Params& p, double delta) {
  Params q = p;
  q.delta = delta;
  double best = std::numeric_limits<double>::infinity();
  for (const cplx& v : eigenvalues(bright_hamiltonian(q))) best = std::min(best, std::abs(v.imag()));
  return best;
}

std::vector<double> linear_grid(double lo, double hi, std::size_t n) {
  if (n == 0) return {};
  if (n == 1) return {lo};
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  g.back() = hi;
  return g;
}

std::vector<double> bracket_trap(double lo, double hi, std::size_t n, double trap) {
  if (n < 2 || !(hi > lo)) throw PreconditionError("scan window needs delta_max > delta_min and at least 2 points");
  const double step = (hi - lo) / static_cast<double>(n - 1);
  std::size_t below = 0, above = 0;
  if (trap - 1.0 < lo) below = static_cast<std::size_t>(std::ceil((lo - (trap - 1.0)) / step));
  if (trap + 1.0 > hi) above = static_cast<std::size_t>(std::ceil(((trap + 1.0) - hi) / step));
  if (below == 0 && above == 0) return linear_grid(lo, hi, n);
  const double new_lo = lo - static_cast<double>(below) * step;
  const double new_hi = hi + static_cast<double>(above) * step;
  return linear_grid(new_lo, new_hi, n + below + above);
}

std::vector<double> default_delta_grid(const Params& p) { return bracket_trap(-10.0, 10.0, 2001, trapping_delta(p)); }

FanoProfile fano_scan(const Params& p, std::span<const double> delta_grid, double t_obs, const Init& init, Model model,
                      unsigned threads) {
  p.validate();
  if (delta_grid.empty()) throw PreconditionError("fano_scan: detuning grid is empty");
  for (std::size_t i = 1; i < delta_grid.size(); ++i)
    if (!(delta_grid[i] > delta_grid[i - 1])) throw PreconditionError("fano_scan: detuning grid must be strictly increasing");
  if (!(t_obs > 0.0) || !std::isfinite(t_obs)) throw PreconditionError("fano_scan: observation time must be positive");

  const State s0 = initial_state(model, init);
  FanoProfile out;
  out.deltas.assign(delta_grid.begin(), delta_grid.end());
  out.ionization.assign(delta_grid.size(), 0.0);
  out.observation_time = t_obs;
  out.model = model;
  out.init = init.kind;

  const std::size_t n = delta_grid.size();
  std::atomic<std::size_t> cursor{0};
  std::mutex fail_mutex;
  std::size_t fail_index = n;
  std::string fail_message;

  auto worker = [&] {
    for (std::size_t i = cursor++; i < n; i = cursor++) {
      try {
        Params q = p;
        q.delta = delta_grid[i];
        out.ionization[i] = ionization(propagate_to(model_hamiltonian(q, model), s0, 0.0, t_obs));
      } catch (const std::exception& e) {
        std::lock_guard lock(fail_mutex);
        if (i < fail_index) {
          fail_index = i;
          fail_message = e.what();
        }
      }
    }
  };

  unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  if (fail_index < n)
    throw Error("fano_scan failed at delta = " + std::to_string(delta_grid[fail_index]) + ": " + fail_message);
  return out;
}

ProfileMinimum profile_minimum(const FanoProfile& f) {
  if (f.ionization.empty()) throw PreconditionError("profile_minimum: empty profile");
  const auto it = std::min_element(f.ionization.begin(), f.ionization.end());
  const auto idx = static_cast<std::size_t>(it - f.ionization.begin());
  return {idx, f.deltas[idx], *it};
}

double profile_width(const FanoProfile& f) {
  const ProfileMinimum m = profile_minimum(f);
  const double top = *std::max_element(f.ionization.begin(), f.ionization.end());
  const double level = m.ionization + 0.5 * (top - m.ionization);
  std::size_t lo = m.index, hi = m.index;
  while (lo > 0 && f.ionization[lo - 1] <= level) --lo;
  while (hi + 1 < f.ionization.size() && f.ionization[hi + 1] <= level) ++hi;
  return f.deltas[hi] - f.deltas[lo];
}

double asymptotic_survival(const Params& p, InitKind init) {
  p.validate();
  if (!(std::abs(p.delta - trapping_delta(p)) <= kTrapTolerance))
    throw PreconditionError("asymptotic_survival needs delta on the trapping manifold");
  const double sum = p.gamma_e + p.gamma_g;
  const double bright = (sum == 0.0) ? 1.0 : p.gamma_e / sum;
  switch (init) {
    case InitKind::bright: return bright;
    case InitKind::g1:
    case InitKind::g2: return 0.5 + 0.5 * bright;
    case InitKind::custom: break;
  }
  throw UsageError("asymptotic_survival is defined for bright, g1 and g2 starts only");
}

DegeneracyReport degeneracy_validity(const Params& p, std::span<const double> shifts, const TimeGrid& grid,
                                     std::span<const double> delta_grid, double tol) {
  std::vector<std::pair<double, double>> pairs;
  for (double s : shifts) pairs.emplace_back(s, s);
  return degeneracy_validity(p, pairs, grid, delta_grid, tol);
}

DegeneracyReport degeneracy_validity(const Params& p, std::span<const std::pair<double, double>> shifts,
                                     const TimeGrid& grid, std::span<const double> delta_grid, double tol) {
  p.validate();
  grid.validate();
  for (const auto& [sg, se] : shifts)
    if (!(sg >= 0.0) || !(se >= 0.0) || !std::isfinite(sg) || !std::isfinite(se))
      throw PreconditionError("degeneracy_validity: shifts must be non-negative");

  Params base = p;
  base.shift_g = 0.0;
  base.shift_e = 0.0;
  const Trajectory degenerate = evolve(base, Model::four_state, Init::g1(), grid, tol, Method::rk);

  DegeneracyReport report;
  for (std::size_t i = 0; i < grid.n_samples; ++i) report.times.push_back(grid.at(i));
  report.ionization_degenerate = degenerate.ionization;
  if (!delta_grid.empty()) {
    report.profile_degenerate = fano_scan(base, delta_grid, grid.t_end, Init::g1(), Model::four_state);
    report.minimum_degenerate = profile_minimum(report.profile_degenerate);
    report.width_degenerate = profile_width(report.profile_degenerate);
  }

  for (const auto& [sg, se] : shifts) {
    Params shifted = base;
    shifted.shift_g = sg;
    shifted.shift_e = se;
    const Trajectory nd = evolve(shifted, Model::nondegenerate4, Init::g1(), grid, tol, Method::rk);

    DegeneracyEntry e;
    e.shift_g = sg;
    e.shift_e = se;
    e.ionization_nondegenerate = nd.ionization;
    for (std::size_t i = 0; i < grid.n_samples; ++i) {
      e.sup_ionization_difference =
          std::max(e.sup_ionization_difference, std::abs(nd.ionization[i] - degenerate.ionization[i]));
      for (std::size_t k = 0; k < 4; ++k)
        e.sup_amplitude_difference =
            std::max(e.sup_amplitude_difference, std::abs(nd.original[i][k] - degenerate.original[i][k]));
    }
    if (!delta_grid.empty()) {
      e.profile = fano_scan(shifted, delta_grid, grid.t_end, Init::g1(), Model::nondegenerate4);
      e.minimum = profile_minimum(e.profile);
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace lics
