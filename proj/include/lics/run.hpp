#pragma once

#include <filesystem>
#include <ostream>

#include "lics/config.hpp"

namespace lics {

/// Executes one configured command, writing CSV (and SVG when cfg.plot) and a
/// one-line summary to `out`. Returns 0 on success; on any error prints the
/// message to `err` and returns 1.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Path of the SVG written next to a CSV output.
std::filesystem::path svg_path_for(const std::filesystem::path& csv);

/// Path of the Fano-profile CSV the nondeg command writes next to its trajectory.
std::filesystem::path profile_path_for(const std::filesystem::path& csv);

}  // namespace lics
