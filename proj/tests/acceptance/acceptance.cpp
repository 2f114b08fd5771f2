// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Each line carries the measured quantity next to its bound.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lics/analysis.hpp"
#include "lics/analytic.hpp"
#include "lics/config.hpp"
#include "lics/evolve.hpp"
#include "lics/integrator.hpp"
#include "lics/model.hpp"
#include "lics/run.hpp"
#include "lics/transforms.hpp"

using namespace lics;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    pass = pass && ok;
    if (!detail.empty()) detail += "; ";
    detail += what + (ok ? "" : " [violated]");
  }
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

Params random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> rate(0.0, 20.0), q(-10.0, 10.0), stark(-5.0, 5.0), det(-20.0, 20.0);
  Params p;
  p.gamma_g = 20.0 - rate(rng);
  p.gamma_e = 20.0 - rate(rng);
  p.q_gg = q(rng);
  p.q_ee = q(rng);
  p.q_eg = q(rng);
  p.stark_g = stark(rng);
  p.stark_e = stark(rng);
  p.delta = det(rng);
  return p;
}

Params at_trap(Params p) {
  p.delta = trapping_delta(p);
  return p;
}

double sup_diff(const Trajectory& a, const Trajectory& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.states.size(); ++k)
    for (std::size_t i = 0; i < a.states[k].size(); ++i) m = std::max(m, std::abs(a.states[k][i] - b.states[k][i]));
  return m;
}

Outcome block_diagonalization() {
  Outcome o;
  std::mt19937_64 rng(1);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const CMatrix h = effective_hamiltonian(random_params(rng));
    worst = std::max(worst, block_diagonalize(h).residual / h.max_abs());
  }
  o.require(worst < 1e-12, "max off-block/|H| = " + fmt("%.2e", worst) + " < 1e-12");
  return o;
}

Outcome trapping_condition() {
  Outcome o;
  std::mt19937_64 rng(2);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Params p = random_params(rng);
    worst = std::max(worst, trapping_residual(p, trapping_delta(p)) / (p.gamma_e + p.gamma_g));
  }
  o.require(worst < 1e-10, "max residual/(Ge+Gg) = " + fmt("%.2e", worst) + " < 1e-10");

  // Brute-force scan on the reference set and a few random sets.
  std::vector<Params> sets{reference_params(), split_reference_params()};
  for (int i = 0; i < 3; ++i) sets.push_back(random_params(rng));
  double worst_offset = 0.0;
  for (const Params& p : sets) {
    const double trap = trapping_delta(p);
    const auto grid = linear_grid(trap - 1.0, trap + 1.0, 20001);
    std::size_t best = 0;
    double best_r = INFINITY;
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const double r = trapping_residual(p, grid[k]);
      if (r < best_r) best_r = r, best = k;
    }
    worst_offset = std::max(worst_offset, std::abs(grid[best] - trap));
  }
  o.require(worst_offset <= 1e-4 + 1e-12, "scan argmin offset = " + fmt("%.1e", worst_offset) + " <= 1e-4");
  return o;
}

Outcome bright_start() {
  Outcome o;
  const Params p = at_trap(reference_params());
  o.require(std::abs(p.delta - 0.809) < 1e-12, "trap = " + fmt("%.6f", p.delta));
  const TimeGrid grid{0.0, 6.0, 601};
  const Trajectory ex = evolve(p, Model::bright2, Init::bright(), grid);
  const Trajectory rk = evolve(p, Model::bright2, Init::bright(), grid, 1e-12, Method::rk);
  Trajectory an = ex;
  for (auto& s : an.states) {
    const auto a = analytic_bright(p, s.time());
    s[0] = a.b_g;
    s[1] = a.b_e;
  }
  const double ion = 1.0 - std::norm(an.states.back()[0]) - std::norm(an.states.back()[1]);
  const double four = evolve(p, Model::four_state, Init::bright(), grid).ionization.back();
  o.require(std::abs(ion - 0.3015351) < 1e-6, "I(6T) analytic = " + fmt("%.7f", ion));
  o.require(std::abs(four - 0.3015351) < 1e-6, "I(6T) four-state = " + fmt("%.7f", four));
  const double d1 = sup_diff(an, ex), d2 = sup_diff(an, rk), d3 = sup_diff(ex, rk);
  o.require(std::max({d1, d2, d3}) < 1e-8,
            "sup |analytic-expm| = " + fmt("%.1e", d1) + ", |analytic-rk| = " + fmt("%.1e", d2) +
                ", |expm-rk| = " + fmt("%.1e", d3) + " < 1e-8");
  return o;
}

Outcome ground_start() {
  Outcome o;
  const Params p = at_trap(reference_params());
  const Trajectory tr = evolve(p, Model::four_state, Init::g1(), {0.0, 6.0, 601});
  double worst = 0.0;
  for (const auto& s : tr.states) worst = std::max(worst, std::abs(std::norm(s[2]) + std::norm(s[3]) - 0.5));
  o.require(worst < 1e-10, "max |dark population - 0.5| = " + fmt("%.1e", worst) + " < 1e-10");
  o.require(std::abs(tr.ionization.back() - 0.1507675) < 1e-6, "I(6T) = " + fmt("%.7f", tr.ionization.back()));
  return o;
}

Outcome fano_profiles() {
  Outcome o;
  const Params p = reference_params();
  const auto grid = linear_grid(-10.0, 10.0, 2001);
  const double step = grid[1] - grid[0];
  const double trap = trapping_delta(p);

  const ProfileMinimum mb = profile_minimum(fano_scan(p, grid, 6.0, Init::bright(), Model::four_state));
  o.require(std::abs(mb.delta - trap) <= step + 1e-12,
            "(a) bright argmin = " + fmt("%.3f", mb.delta) + " vs trap " + fmt("%.3f", trap) + " within " +
                fmt("%.3f", step));

  const FanoProfile g1 = fano_scan(p, grid, 6.0, Init::g1(), Model::four_state);
  const double top = *std::max_element(g1.ionization.begin(), g1.ionization.end());
  o.require(top <= 0.5 + 1e-9, "(b) g1 max = " + fmt("%.6f", top) + " <= 0.5");

  const ProfileMinimum m2 = profile_minimum(fano_scan(p, grid, 6.0, Init::g1(), Model::twolevel2));
  const ProfileMinimum m4 = profile_minimum(g1);
  const double gap = g1.ionization[m2.index] - m4.ionization;
  o.require(gap >= 0.05, "(c) I4(two-level argmin " + fmt("%.3f", m2.delta) + ") - min I4 = " + fmt("%.4f", gap) +
                             " >= 0.05");
  return o;
}

Outcome split_doublets() {
  Outcome o;
  const Params p = at_trap(split_reference_params());
  const TimeGrid grid{0.0, 10.0, 201};
  const auto dgrid = linear_grid(-10.0, 10.0, 2001);

  const double big[] = {0.2};
  const DegeneracyReport r = degeneracy_validity(p, big, grid, dgrid);
  double margin = INFINITY;
  for (std::size_t k = 0; k < r.times.size(); ++k)
    if (r.times[k] >= 5.0)
      margin = std::min(margin, r.entries[0].ionization_nondegenerate[k] - r.ionization_degenerate[k]);
  o.require(margin > 0.0, "min over [5T,10T] of I_nd - I_deg = " + fmt("%.2e", margin) + " > 0");

  const double tiny[] = {1e-6};
  const DegeneracyReport t = degeneracy_validity(p, tiny, grid, {});
  o.require(t.entries[0].sup_amplitude_difference < 1e-4,
            "shift 1e-6 sup difference = " + fmt("%.1e", t.entries[0].sup_amplitude_difference) + " < 1e-4");

  const double shift = std::abs(r.entries[0].minimum.delta - r.minimum_degenerate.delta);
  o.require(shift < 0.5, "Fano minima " + fmt("%.3f", r.minimum_degenerate.delta) + " vs " +
                             fmt("%.3f", r.entries[0].minimum.delta) + " differ by " + fmt("%.3f", shift) + " < 0.5");
  return o;
}

Outcome invariants() {
  Outcome o;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const Model models[] = {Model::four_state, Model::bright2, Model::twolevel2, Model::nondegenerate4};
  int bad_monotone = 0, bad_range = 0;
  for (int i = 0; i < 200; ++i) {
    Params p = random_params(rng);
    p.shift_g = u(rng);
    p.shift_e = u(rng);
    const Model m = models[i % 4];
    const Init init = (i % 2 == 0) ? Init::bright() : Init::g1();
    const Trajectory tr = evolve(p, m, init, {0.0, 6.0, 301});
    for (std::size_t k = 0; k < tr.ionization.size(); ++k) {
      if (tr.ionization[k] < 0.0 || tr.ionization[k] > 1.0) ++bad_range;
      if (k && tr.ionization[k] < tr.ionization[k - 1]) ++bad_monotone;
    }
  }
  o.require(bad_monotone == 0 && bad_range == 0,
            std::to_string(bad_monotone) + " decreases, " + std::to_string(bad_range) + " out of [0,1]");

  Params herm;
  herm.stark_g = 0.5;
  herm.stark_e = -0.3;
  herm.delta = 1.7;
  herm.q_gg = 2.0;
  double drift = 0.0;
  for (Method method : {Method::expm, Method::rk}) {
    const Trajectory tr = evolve(herm, Model::four_state, Init::g1(), {0.0, 10.0, 101}, 1e-12, method);
    for (double x : tr.ionization) drift = std::max(drift, std::abs(x));
  }
  o.require(drift < 1e-10, "Hermitian norm drift = " + fmt("%.1e", drift) + " < 1e-10");

  std::normal_distribution<double> n(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    State s(Basis::original4);
    double norm = 0.0;
    for (auto& a : s.amps()) norm += std::norm(a = {n(rng), n(rng)});
    for (auto& a : s.amps()) a /= std::sqrt(norm);
    const State b = to_bright_dark(s);
    const State back = from_bright_dark(b);
    worst = std::max(worst, std::abs(b.norm2() - s.norm2()));
    for (std::size_t k = 0; k < 4; ++k) worst = std::max(worst, std::abs(back[k] - s[k]));
  }
  o.require(worst < 1e-15, "bright/dark map norm and round-trip error = " + fmt("%.1e", worst) + " < 1e-15");
  return o;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome determinism() {
  Outcome o;
  const fs::path dir = fs::temp_directory_path() / "lics_acceptance_determinism";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string params =
      "gamma_g = 5.5\ngamma_e = 12.74\nstark_g = 0.5\nstark_e = 0.6\nq_gg = 2.3\nq_eg = 3.4\nq_ee = 5.0\n"
      "delta = trap\n";
  const std::string split =
      "gamma_g = 1.08\ngamma_e = 2.09\nstark_g = 0.33\nstark_e = 0.26\nq_gg = 2.3\nq_eg = 2.4\nq_ee = 2.5\n"
      "shift_g = 0.2\nshift_e = 0.2\ndelta = trap\n";
  const std::vector<std::pair<std::string, std::string>> configs{
      {"evolve", params + "command = evolve\ninit = g1\nt_end = 6\nn_samples = 601\n"},
      {"evolve_two", params + "command = evolve\nmodel = twolevel2\ninit = g1\nt_end = 6\nn_samples = 301\n"},
      {"fano", params + "command = fano\ninit = bright\ndelta_min = -10\ndelta_max = 10\ndelta_steps = 2001\nt_obs = 6\n"},
      {"nondeg", split + "command = nondeg\nt_end = 10\nn_samples = 201\ndelta_min = -3\ndelta_max = 1\n"
                        "delta_steps = 201\n"},
  };
  for (const auto& [name, text] : configs) {
    std::vector<std::string> runs;
    for (int rep = 0; rep < 2; ++rep) {
      RunConfig c = parse_config(text, false);
      const fs::path out = dir / (name + "_" + std::to_string(rep) + ".csv");
      c.out = out.string();
      check_required(c);
      std::ostringstream sink, err;
      if (run(c, sink, err) != 0) {
        o.require(false, name + ": " + err.str());
        break;
      }
      std::string bytes = slurp(out);
      if (c.command == Command::nondeg) bytes += slurp(profile_path_for(out));
      runs.push_back(bytes);
    }
    if (runs.size() == 2) o.require(!runs[0].empty() && runs[0] == runs[1], name + " identical");
  }
  fs::remove_all(dir);
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;  // 0 = no runtime bound
  std::function<Outcome()> check;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "block-diagonalization", 1.0, block_diagonalization},
      {2, "trapping condition", 5.0, trapping_condition},
      {3, "bright-start dynamics", 1.0, bright_start},
      {4, "ground-start dynamics", 0.0, ground_start},
      {5, "Fano profiles", 10.0, fano_profiles},
      {6, "non-degenerate ground states", 10.0, split_doublets},
      {7, "physics invariants", 5.0, invariants},
      {8, "determinism", 0.0, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0.0) o.require(secs < c.budget_s, "runtime " + fmt("%.2f", secs) + " s < " + fmt("%.0f", c.budget_s) + " s");
    else o.detail += "; runtime " + fmt("%.2f", secs) + " s";
    if (!o.pass) ++failed;
    std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
