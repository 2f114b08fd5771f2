#pragma once

#include <filesystem>
#include <ostream>
#include <string_view>

#include "lics/analysis.hpp"
#include "lics/propagate.hpp"

namespace lics {

inline constexpr std::string_view kTrajectoryHeader =
    "t,re_bg,im_bg,re_be,im_be,re_dg,im_dg,re_de,im_de,pop_bg,pop_be,pop_dg,pop_de,ionization";
inline constexpr std::string_view kProfileHeader = "delta,ionization";

// CSV: header row, LF line endings, values printed with 17 significant
// digits. Two-component states fill the d_g and d_e columns with zeros.
void write_csv(const Trajectory& traj, std::ostream& out);
void write_csv(const FanoProfile& profile, std::ostream& out);
void write_csv(const Trajectory& traj, const std::filesystem::path& path);
void write_csv(const FanoProfile& profile, const std::filesystem::path& path);

// Self-contained SVG line plots. Trajectories get one polyline per
// population that is not identically zero plus the ionization; profiles get
// a single ionization polyline. Empty input throws PreconditionError before
// any file is created.
void render_svg(const Trajectory& traj, std::ostream& out);
void render_svg(const FanoProfile& profile, std::ostream& out);
void render_svg(const Trajectory& traj, const std::filesystem::path& path);
void render_svg(const FanoProfile& profile, const std::filesystem::path& path);

}  // namespace lics
