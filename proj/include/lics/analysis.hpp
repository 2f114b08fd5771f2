#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "lics/analytic.hpp"
#include "lics/evolve.hpp"
#include "lics/model.hpp"
#include "lics/propagate.hpp"
#include "lics/state.hpp"

namespace lics {

/// min over the bright-block eigenvalues at detuning `delta` of |Im λ|.
/// Zero exactly when one bright eigenmode does not decay.
double trapping_residual(const Params& p, double delta);

/// Ionization versus detuning at a fixed observation time.
struct FanoProfile {
  std::vector<double> deltas;
  std::vector<double> ionization;
  double observation_time = 0.0;
  Model model = Model::four_state;
  InitKind init = InitKind::bright;
};

/// n evenly spaced points on [lo, hi], endpoints exact.
std::vector<double> linear_grid(double lo, double hi, std::size_t n);

/// Default scan window: [-10, 10] in 2001 points, widened with the same
/// spacing until it brackets trapping_delta(p) by at least 1.
std::vector<double> default_delta_grid(const Params& p);

/// Widens [lo, hi] (keeping the step) so it contains trap ± 1. Returns the
/// original grid when it already brackets the trap.
std::vector<double> bracket_trap(double lo, double hi, std::size_t n, double trap);

/// Propagates from `init` to t_obs for every detuning (p.delta is replaced).
/// Points are independent and evaluated on up to `threads` workers (0 = all
/// cores); results are in grid order regardless. A failing point aborts the
/// scan with an Error naming its detuning.
FanoProfile fano_scan(const Params& p, std::span<const double> delta_grid, double t_obs, const Init& init, Model model,
                      unsigned threads = 0);

struct ProfileMinimum {
  std::size_t index = 0;
  double delta = 0.0;
  double ionization = 0.0;
};

/// First grid point attaining the smallest ionization.
ProfileMinimum profile_minimum(const FanoProfile& f);

/// Full width of the dip around the minimum at half its depth (half way
/// between the minimum and the profile maximum), measured on the grid.
double profile_width(const FanoProfile& f);

/// t -> ∞ limit of the bound population on the trapping manifold: Γe/(Γe+Γg)
/// for a bright start, 1/2 + Γe/(2(Γe+Γg)) for g1 or g2.
double asymptotic_survival(const Params& p, InitKind init);

struct DegeneracyEntry {
  double shift_g = 0.0;
  double shift_e = 0.0;
  /// sup over the grid of |I_nd(t) - I_deg(t)|.
  double sup_ionization_difference = 0.0;
  /// sup over the grid and components of |c_nd(t) - c_deg(t)| (original basis).
  double sup_amplitude_difference = 0.0;
  std::vector<double> ionization_nondegenerate;
  FanoProfile profile;
  ProfileMinimum minimum;
};

struct DegeneracyReport {
  std::vector<double> times;
  std::vector<double> ionization_degenerate;
  FanoProfile profile_degenerate;
  ProfileMinimum minimum_degenerate;
  double width_degenerate = 0.0;
  std::vector<DegeneracyEntry> entries;
};

/// Compares the degenerate model with the non-degenerate one for each shift
/// (shift_g = shift_e = shift), both started in g1 and integrated with the RK
/// solver at `tol`. Profiles are taken at grid.t_end over `delta_grid`.
DegeneracyReport degeneracy_validity(const Params& p, std::span<const double> shifts, const TimeGrid& grid,
                                     std::span<const double> delta_grid, double tol = 1e-10);

/// Same comparison for explicit (shift_g, shift_e) pairs.
DegeneracyReport degeneracy_validity(const Params& p, std::span<const std::pair<double, double>> shifts,
                                     const TimeGrid& grid, std::span<const double> delta_grid, double tol = 1e-10);

}  // namespace lics
