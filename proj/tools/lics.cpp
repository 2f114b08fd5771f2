#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "lics/config.hpp"
#include "lics/errors.hpp"
#include "lics/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Multilevel laser-induced continuum structure simulator"};
  std::string config_path;
  std::string out_path;
  bool plot = false;
  double tol = 0.0;
  app.add_option("config", config_path, "Run configuration (key = value lines)")->required();
  auto* out_opt = app.add_option("--out", out_path, "Output CSV path (overrides `out`)");
  app.add_flag("--plot", plot, "Also write an SVG plot next to the CSV");
  auto* tol_opt = app.add_option("--tol", tol, "Integrator tolerance (overrides `tol`)")->check(CLI::Range(1e-13, 1e-3));
  CLI11_PARSE(app, argc, argv);

  std::ifstream in(config_path);
  if (!in) {
    std::cerr << "lics: cannot open config '" << config_path << "'\n";
    return 1;
  }

  lics::RunConfig cfg;
  try {
    cfg = lics::parse_config(in, /*require_keys=*/false);
    if (*out_opt) cfg.out = out_path;
    if (plot) cfg.plot = true;
    if (*tol_opt) cfg.tol = tol;
    lics::check_required(cfg);
  } catch (const lics::Error& e) {
    std::cerr << "lics: " << config_path << ": " << e.what() << '\n';
    return 1;
  }
  return lics::run(cfg, std::cout, std::cerr);
}
