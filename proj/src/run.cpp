#include "lics/run.hpp"

#include <algorithm>
#include <cstdio>
#include <string>

#include "lics/analysis.hpp"
#include "lics/eigen.hpp"
#include "lics/errors.hpp"
#include "lics/output.hpp"

namespace lics {

namespace {

std::string fixed6(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::string sci(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6e", x);
  return buf;
}

TimeGrid grid_of(const RunConfig& c) { return {c.t_start, *c.t_end, *c.n_samples}; }

std::vector<double> scan_grid(const RunConfig& c) {
  return bracket_trap(*c.delta_min, *c.delta_max, *c.delta_steps, trapping_delta(c.params));
}

void run_trap(const RunConfig& c, std::ostream& out) {
  const double trap = trapping_delta(c.params);
  out << "trapping_delta = " << fixed6(trap) << " residual = " << sci(trapping_residual(c.params, trap)) << '\n';
}

void run_eigen(const RunConfig& c, std::ostream& out) {
  const auto values = eigenvalues(model_hamiltonian(c.params, c.model));
  out << "eigenvalues(" << to_string(c.model) << "):";
  for (const auto& v : values) out << ' ' << fixed6(v.real()) << (v.imag() < 0 ? "-" : "+") << fixed6(std::abs(v.imag())) << 'i';
  out << '\n';
}

void run_evolve(const RunConfig& c, std::ostream& out) {
  const Trajectory traj = evolve(c.params, c.model, Init{c.init, std::nullopt}, grid_of(c), c.tol);
  const std::filesystem::path path = *c.out;
  write_csv(traj, path);
  if (c.plot) render_svg(traj, svg_path_for(path));
  out << "evolve: model=" << to_string(c.model) << " init=" << to_string(c.init) << " samples=" << traj.states.size()
      << " final_ionization=" << fixed6(traj.ionization.back()) << '\n';
}

void run_fano(const RunConfig& c, std::ostream& out) {
  const auto deltas = scan_grid(c);
  const FanoProfile prof = fano_scan(c.params, deltas, *c.t_obs, Init{c.init, std::nullopt}, c.model);
  const std::filesystem::path path = *c.out;
  write_csv(prof, path);
  if (c.plot) render_svg(prof, svg_path_for(path));
  const ProfileMinimum m = profile_minimum(prof);
  const double top = *std::max_element(prof.ionization.begin(), prof.ionization.end());
  out << "fano: model=" << to_string(c.model) << " init=" << to_string(c.init) << " points=" << deltas.size()
      << " min_ionization=" << fixed6(m.ionization) << " at delta=" << fixed6(m.delta)
      << " max_ionization=" << fixed6(top) << '\n';
}

void run_nondeg(const RunConfig& c, std::ostream& out) {
  const TimeGrid grid = grid_of(c);
  std::vector<double> deltas;
  if (c.delta_min) deltas = scan_grid(c);
  const std::pair<double, double> shift{c.params.shift_g, c.params.shift_e};
  // Profiles are observed at t_obs when given, otherwise at the end of the trajectory.
  TimeGrid profile_grid = grid;
  if (c.t_obs) profile_grid = {grid.t_start, grid.t_start + *c.t_obs, 2};

  const DegeneracyReport report = degeneracy_validity(c.params, std::span(&shift, 1), grid, {}, c.tol);
  const Trajectory nd =
      evolve(c.params, Model::nondegenerate4, Init::g1(), grid, c.tol, Method::rk);
  const std::filesystem::path path = *c.out;
  write_csv(nd, path);
  if (c.plot) render_svg(nd, svg_path_for(path));

  const DegeneracyEntry& e = report.entries.front();
  out << "nondeg: shift_g=" << fixed6(e.shift_g) << " shift_e=" << fixed6(e.shift_e)
      << " sup_ionization_difference=" << sci(e.sup_ionization_difference)
      << " final_ionization_degenerate=" << fixed6(report.ionization_degenerate.back())
      << " final_ionization_nondegenerate=" << fixed6(e.ionization_nondegenerate.back());

  if (!deltas.empty()) {
    const DegeneracyReport prof = degeneracy_validity(c.params, std::span(&shift, 1), profile_grid, deltas, c.tol);
    write_csv(prof.entries.front().profile, profile_path_for(path));
    if (c.plot) render_svg(prof.entries.front().profile, svg_path_for(profile_path_for(path)));
    out << " min_delta_degenerate=" << fixed6(prof.minimum_degenerate.delta)
        << " min_delta_nondegenerate=" << fixed6(prof.entries.front().minimum.delta);
  }
  out << '\n';
}

}  // namespace

std::filesystem::path svg_path_for(const std::filesystem::path& csv) {
  std::filesystem::path p = csv;
  p.replace_extension(".svg");
  return p;
}

std::filesystem::path profile_path_for(const std::filesystem::path& csv) {
  std::filesystem::path p = csv;
  const std::string stem = p.stem().string();
  p.replace_filename(stem + ".profile.csv");
  return p;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    check_required(cfg);
    cfg.params.validate();
    switch (cfg.command) {
      case Command::trap: run_trap(cfg, out); break;
      case Command::eigen: run_eigen(cfg, out); break;
      case Command::evolve: run_evolve(cfg, out); break;
      case Command::fano: run_fano(cfg, out); break;
      case Command::nondeg: run_nondeg(cfg, out); break;
    }
    return 0;
  } catch (const std::exception& e) {
    err << "lics: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace lics
