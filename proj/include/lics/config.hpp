#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>

#include "lics/evolve.hpp"
#include "lics/model.hpp"

namespace lics {

enum class Command { evolve, fano, trap, eigen, nondeg };

std::string_view to_string(Command c) noexcept;
std::optional<Command> parse_command(std::string_view s) noexcept;

/// One run of the command-line tool. Optional members are absent when the
/// key was not given; the rest carry their defaults.
struct RunConfig {
  Params params;
  /// `delta = trap` was given; params.delta holds the resolved value.
  bool delta_is_trap = false;
  bool delta_given = false;

  Command command = Command::trap;
  Model model = Model::four_state;
  InitKind init = InitKind::bright;

  double t_start = 0.0;
  std::optional<double> t_end;
  std::optional<std::size_t> n_samples;

  std::optional<double> delta_min;
  std::optional<double> delta_max;
  std::optional<std::size_t> delta_steps;
  std::optional<double> t_obs;

  double tol = 1e-10;
  std::optional<std::string> out;
  bool plot = false;

  bool operator==(const RunConfig&) const = default;
};

/// Parses the line-based `key = value` format (`#` starts a comment). Throws
/// ConfigError carrying the offending line for malformed lines, unknown or
/// duplicate keys, bad values and physical-domain violations, and (without a
/// line) for required keys the chosen command is missing.
/// With require_keys = false the per-command required-key check is skipped
/// (for callers that fill keys in afterwards and call check_required).
RunConfig parse_config(std::istream& in, bool require_keys = true);
RunConfig parse_config(std::string_view text, bool require_keys = true);

/// Checks that every key the command needs is present. parse_config calls
/// this; call it again after overriding fields by hand.
void check_required(const RunConfig& cfg);

/// Canonical text form; parse_config(render_config(c)) == c.
std::string render_config(const RunConfig& cfg);

}  // namespace lics
