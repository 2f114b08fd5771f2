#include "lics/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "lics/analytic.hpp"
#include "lics/errors.hpp"

namespace lics {

std::string_view to_string(Command c) noexcept {
  switch (c) {
    case Command::evolve: return "evolve";
    case Command::fano: return "fano";
    case Command::trap: return "trap";
    case Command::eigen: return "eigen";
    case Command::nondeg: return "nondeg";
  }
  return "?";
}

std::optional<Command> parse_command(std::string_view s) noexcept {
  for (Command c : {Command::evolve, Command::fano, Command::trap, Command::eigen, Command::nondeg})
    if (s == to_string(c)) return c;
  return std::nullopt;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_real(std::string_view v, int line, std::string_view key) {
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc{} || ptr != v.data() + v.size())
    throw ConfigError(line, std::string(key) + ": expected a number, got '" + std::string(v) + "'");
  if (!std::isfinite(x)) throw ConfigError(line, std::string(key) + ": value must be finite");
  return x;
}

std::size_t parse_count(std::string_view v, int line, std::string_view key) {
  std::size_t x = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc{} || ptr != v.data() + v.size())
    throw ConfigError(line, std::string(key) + ": expected a non-negative integer, got '" + std::string(v) + "'");
  return x;
}

bool parse_bool(std::string_view v, int line, std::string_view key) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError(line, std::string(key) + ": expected true or false, got '" + std::string(v) + "'");
}

void non_negative(double x, int line, std::string_view key) {
  if (x < 0.0) throw ConfigError(line, std::string(key) + " must be non-negative (domain error)");
}

using Setter = std::function<void(RunConfig&, std::string_view, int)>;

const std::map<std::string_view, Setter>& setters() {
  static const std::map<std::string_view, Setter> table = {
      {"gamma_g", [](RunConfig& c, std::string_view v, int l) {
         c.params.gamma_g = parse_real(v, l, "gamma_g");
         non_negative(c.params.gamma_g, l, "gamma_g");
       }},
      {"gamma_e", [](RunConfig& c, std::string_view v, int l) {
         c.params.gamma_e = parse_real(v, l, "gamma_e");
         non_negative(c.params.gamma_e, l, "gamma_e");
       }},
      {"stark_g", [](RunConfig& c, std::string_view v, int l) { c.params.stark_g = parse_real(v, l, "stark_g"); }},
      {"stark_e", [](RunConfig& c, std::string_view v, int l) { c.params.stark_e = parse_real(v, l, "stark_e"); }},
      {"q_gg", [](RunConfig& c, std::string_view v, int l) { c.params.q_gg = parse_real(v, l, "q_gg"); }},
      {"q_ee", [](RunConfig& c, std::string_view v, int l) { c.params.q_ee = parse_real(v, l, "q_ee"); }},
      {"q_eg", [](RunConfig& c, std::string_view v, int l) { c.params.q_eg = parse_real(v, l, "q_eg"); }},
      {"delta", [](RunConfig& c, std::string_view v, int l) {
         c.delta_given = true;
         if (v == "trap") {
           c.delta_is_trap = true;
         } else {
           c.params.delta = parse_real(v, l, "delta");
         }
       }},
      {"shift_g", [](RunConfig& c, std::string_view v, int l) {
         c.params.shift_g = parse_real(v, l, "shift_g");
         non_negative(c.params.shift_g, l, "shift_g");
       }},
      {"shift_e", [](RunConfig& c, std::string_view v, int l) {
         c.params.shift_e = parse_real(v, l, "shift_e");
         non_negative(c.params.shift_e, l, "shift_e");
       }},
      {"command", [](RunConfig& c, std::string_view v, int l) {
         const auto cmd = parse_command(v);
         if (!cmd) throw ConfigError(l, "command: unknown command '" + std::string(v) + "'");
         c.command = *cmd;
       }},
      {"model", [](RunConfig& c, std::string_view v, int l) {
         const auto m = parse_model(v);
         if (!m) throw ConfigError(l, "model: unknown model '" + std::string(v) + "'");
         c.model = *m;
       }},
      {"init", [](RunConfig& c, std::string_view v, int l) {
         const auto k = parse_init(v);
         if (!k) throw ConfigError(l, "init: unknown initial state '" + std::string(v) + "'");
         c.init = *k;
       }},
      {"t_start", [](RunConfig& c, std::string_view v, int l) { c.t_start = parse_real(v, l, "t_start"); }},
      {"t_end", [](RunConfig& c, std::string_view v, int l) { c.t_end = parse_real(v, l, "t_end"); }},
      {"n_samples", [](RunConfig& c, std::string_view v, int l) {
         c.n_samples = parse_count(v, l, "n_samples");
         if (*c.n_samples < 2) throw ConfigError(l, "n_samples must be at least 2");
       }},
      {"delta_min", [](RunConfig& c, std::string_view v, int l) { c.delta_min = parse_real(v, l, "delta_min"); }},
      {"delta_max", [](RunConfig& c, std::string_view v, int l) { c.delta_max = parse_real(v, l, "delta_max"); }},
      {"delta_steps", [](RunConfig& c, std::string_view v, int l) {
         c.delta_steps = parse_count(v, l, "delta_steps");
         if (*c.delta_steps < 2) throw ConfigError(l, "delta_steps must be at least 2");
       }},
      {"t_obs", [](RunConfig& c, std::string_view v, int l) {
         c.t_obs = parse_real(v, l, "t_obs");
         if (!(*c.t_obs > 0.0)) throw ConfigError(l, "t_obs must be positive");
       }},
      {"tol", [](RunConfig& c, std::string_view v, int l) {
         c.tol = parse_real(v, l, "tol");
         if (!(c.tol >= 1e-13 && c.tol <= 1e-3)) throw ConfigError(l, "tol must lie in [1e-13, 1e-3]");
       }},
      {"out", [](RunConfig& c, std::string_view v, int) { c.out = std::string(v); }},
      {"plot", [](RunConfig& c, std::string_view v, int l) { c.plot = parse_bool(v, l, "plot"); }},
  };
  return table;
}

void require(bool present, std::string_view key, Command cmd) {
  if (!present)
    throw ConfigError(0, "missing required key '" + std::string(key) + "' for command " + std::string(to_string(cmd)));
}

std::string fmt_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

void check_required(const RunConfig& c) {
  const Command cmd = c.command;
  const bool needs_delta = cmd == Command::evolve || cmd == Command::eigen || cmd == Command::nondeg;
  if (needs_delta) require(c.delta_given, "delta", cmd);
  if (cmd == Command::evolve || cmd == Command::nondeg) {
    require(c.t_end.has_value(), "t_end", cmd);
    require(c.n_samples.has_value(), "n_samples", cmd);
    if (!(*c.t_end > c.t_start)) throw ConfigError(0, "t_end must exceed t_start");
  }
  const bool any_scan = c.delta_min || c.delta_max || c.delta_steps;
  if (cmd == Command::fano || (cmd == Command::nondeg && any_scan)) {
    require(c.delta_min.has_value(), "delta_min", cmd);
    require(c.delta_max.has_value(), "delta_max", cmd);
    require(c.delta_steps.has_value(), "delta_steps", cmd);
    if (!(*c.delta_max > *c.delta_min)) throw ConfigError(0, "delta_max must exceed delta_min");
  }
  if (cmd == Command::fano) require(c.t_obs.has_value(), "t_obs", cmd);
  if (cmd == Command::evolve || cmd == Command::fano || cmd == Command::nondeg) require(c.out.has_value(), "out", cmd);
  if (c.plot && !c.out) throw ConfigError(0, "plot needs an out path");
}

RunConfig parse_config(std::istream& in, bool require_keys) {
  RunConfig cfg;
  std::set<std::string, std::less<>> seen;
  bool have_command = false;
  const std::set<std::string_view> param_keys = {"gamma_g", "gamma_e", "stark_g", "stark_e",
                                                 "q_gg",    "q_ee",    "q_eg"};
  std::set<std::string_view> params_seen;

  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(line_no, "expected 'key = value', got '" + std::string(line) + "'");
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError(line_no, "missing key before '='");
    if (value.empty()) throw ConfigError(line_no, std::string(key) + ": missing value");

    const auto& table = setters();
    const auto it = table.find(key);
    if (it == table.end()) throw ConfigError(line_no, "unknown key '" + std::string(key) + "'");
    if (!seen.insert(std::string(key)).second) throw ConfigError(line_no, "duplicate key '" + std::string(key) + "'");
    it->second(cfg, value, line_no);
    if (key == "command") have_command = true;
    if (param_keys.contains(it->first)) params_seen.insert(it->first);
  }

  if (!have_command) throw ConfigError(0, "missing required key 'command'");
  for (std::string_view k : param_keys)
    if (!params_seen.contains(k)) require(false, k, cfg.command);
  if (cfg.delta_is_trap) cfg.params.delta = trapping_delta(cfg.params);
  if (require_keys) check_required(cfg);
  return cfg;
}

RunConfig parse_config(std::string_view text, bool require_keys) {
  std::istringstream in{std::string(text)};
  return parse_config(in, require_keys);
}

std::string render_config(const RunConfig& c) {
  std::ostringstream o;
  const Params& p = c.params;
  o << "command = " << to_string(c.command) << '\n';
  o << "gamma_g = " << fmt_real(p.gamma_g) << '\n';
  o << "gamma_e = " << fmt_real(p.gamma_e) << '\n';
  o << "stark_g = " << fmt_real(p.stark_g) << '\n';
  o << "stark_e = " << fmt_real(p.stark_e) << '\n';
  o << "q_gg = " << fmt_real(p.q_gg) << '\n';
  o << "q_ee = " << fmt_real(p.q_ee) << '\n';
  o << "q_eg = " << fmt_real(p.q_eg) << '\n';
  if (c.delta_is_trap)
    o << "delta = trap\n";
  else if (c.delta_given)
    o << "delta = " << fmt_real(p.delta) << '\n';
  o << "shift_g = " << fmt_real(p.shift_g) << '\n';
  o << "shift_e = " << fmt_real(p.shift_e) << '\n';
  o << "model = " << to_string(c.model) << '\n';
  o << "init = " << to_string(c.init) << '\n';
  o << "t_start = " << fmt_real(c.t_start) << '\n';
  if (c.t_end) o << "t_end = " << fmt_real(*c.t_end) << '\n';
  if (c.n_samples) o << "n_samples = " << *c.n_samples << '\n';
  if (c.delta_min) o << "delta_min = " << fmt_real(*c.delta_min) << '\n';
  if (c.delta_max) o << "delta_max = " << fmt_real(*c.delta_max) << '\n';
  if (c.delta_steps) o << "delta_steps = " << *c.delta_steps << '\n';
  if (c.t_obs) o << "t_obs = " << fmt_real(*c.t_obs) << '\n';
  o << "tol = " << fmt_real(c.tol) << '\n';
  if (c.out) o << "out = " << *c.out << '\n';
  o << "plot = " << (c.plot ? "true" : "false") << '\n';
  return o.str();
}

}  // namespace lics
