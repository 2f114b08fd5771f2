#include "lics/evolve.hpp"

#include <numbers>
#include <string>

#include "lics/errors.hpp"
#include "lics/integrator.hpp"
#include "lics/transforms.hpp"

namespace lics {

std::string_view to_string(Model m) noexcept {
  switch (m) {
    case Model::four_state: return "four_state";
    case Model::bright2: return "bright2";
    case Model::twolevel2: return "twolevel2";
    case Model::nondegenerate4: return "nondegenerate4";
  }
  return "?";
}

std::string_view to_string(InitKind k) noexcept {
  switch (k) {
    case InitKind::bright: return "bright";
    case InitKind::g1: return "g1";
    case InitKind::g2: return "g2";
    case InitKind::custom: return "custom";
  }
  return "?";
}

std::optional<Model> parse_model(std::string_view s) noexcept {
  for (Model m : {Model::four_state, Model::bright2, Model::twolevel2, Model::nondegenerate4})
    if (s == to_string(m)) return m;
  return std::nullopt;
}

std::optional<InitKind> parse_init(std::string_view s) noexcept {
  for (InitKind k : {InitKind::bright, InitKind::g1, InitKind::g2})
    if (s == to_string(k)) return k;
  return std::nullopt;
}

CMatrix model_hamiltonian(const Params& p, Model m) {
  switch (m) {
    case Model::four_state: return effective_hamiltonian(p);
    case Model::bright2: return bright_hamiltonian(p);
    case Model::twolevel2: return two_level_hamiltonian(p);
    case Model::nondegenerate4: return nondegenerate_hamiltonian(p);
  }
  throw UsageError("unknown model");
}

Basis propagation_basis(Model m) noexcept {
  switch (m) {
    case Model::four_state:
    case Model::nondegenerate4: return Basis::original4;
    case Model::bright2: return Basis::bright2;
    case Model::twolevel2: return Basis::twolevel2;
  }
  return Basis::original4;
}

State initial_state(Model m, const Init& init) {
  const Basis basis = propagation_basis(m);
  const double r = kInvSqrt2;

  if (init.kind == InitKind::custom) {
    if (!init.custom) throw UsageError("custom init needs a state");
    const State& s = *init.custom;
    if (s.basis() == basis) return s;
    if (basis == Basis::original4 && s.basis() == Basis::brightdark4) return from_bright_dark(s);
    throw UsageError("custom init in basis " + std::string(to_string(s.basis())) + " is incompatible with model " +
                     std::string(to_string(m)));
  }

  State s(basis);
  switch (basis) {
    case Basis::original4:
      if (init.kind == InitKind::bright) {
        s[0] = r;
        s[1] = r;
      } else {
        s[init.kind == InitKind::g1 ? 0 : 1] = 1.0;
      }
      break;
    case Basis::bright2:
      // Bright projection of the named state; any dark component is dropped.
      s[0] = (init.kind == InitKind::bright) ? 1.0 : r;
      break;
    case Basis::twolevel2:
      if (init.kind == InitKind::g2) throw UsageError("two-level model has a single ground state; use g1 or bright");
      s[0] = 1.0;
      break;
    case Basis::brightdark4: break;
  }
  return s;
}

Trajectory evolve(const Params& p, Model m, const Init& init, const TimeGrid& grid, double tol, Method method) {
  grid.validate();
  const CMatrix h = model_hamiltonian(p, m);
  State s0 = initial_state(m, init);
  s0.set_time(grid.t_start);

  Trajectory traj = (method == Method::expm) ? propagate_expm(h, s0, grid) : integrate(h, s0, grid, tol);
  if (s0.basis() == Basis::original4) {
    traj.original = std::move(traj.states);
    traj.states.clear();
    traj.states.reserve(traj.original.size());
    for (const auto& s : traj.original) traj.states.push_back(to_bright_dark(s));
  }
  return traj;
}

}  // namespace lics
