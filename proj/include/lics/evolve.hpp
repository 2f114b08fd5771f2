#pragma once

#include <optional>
#include <string_view>

#include "lics/model.hpp"
#include "lics/propagate.hpp"
#include "lics/state.hpp"

namespace lics {

enum class Model { four_state, bright2, twolevel2, nondegenerate4 };

enum class InitKind { bright, g1, g2, custom };

struct Init {
  InitKind kind = InitKind::bright;
  std::optional<State> custom;

  static Init bright() { return {InitKind::bright, std::nullopt}; }
  static Init g1() { return {InitKind::g1, std::nullopt}; }
  static Init g2() { return {InitKind::g2, std::nullopt}; }
  static Init from(const State& s) { return {InitKind::custom, s}; }
};

enum class Method { expm, rk };

std::string_view to_string(Model m) noexcept;
std::string_view to_string(InitKind k) noexcept;
std::optional<Model> parse_model(std::string_view s) noexcept;
std::optional<InitKind> parse_init(std::string_view s) noexcept;

/// Hamiltonian of the requested model. Four-state models act on (g1, g2, e1, e2).
CMatrix model_hamiltonian(const Params& p, Model m);

/// Basis the model's Hamiltonian acts on.
Basis propagation_basis(Model m) noexcept;

/// Initial state in propagation_basis(m). Named inits are mapped through the
/// bright/dark transform where needed; the two-level model accepts bright and
/// g1 (both its ground state) and rejects g2. UsageError when incompatible.
State initial_state(Model m, const Init& init);

/// Propagates the model from `init` over `grid`. Four-state trajectories are
/// reported in the (b_g, b_e, d_g, d_e) basis with the original-basis copy in
/// Trajectory::original. `tol` is used only by Method::rk.
Trajectory evolve(const Params& p, Model m, const Init& init, const TimeGrid& grid, double tol = 1e-10,
                  Method method = Method::expm);

}  // namespace lics
