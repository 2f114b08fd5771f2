#include "lics/output.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "lics/errors.hpp"

namespace lics {

namespace {

void put(std::ostream& out, double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  out << buf;
}

std::array<cplx, 4> padded(const State& s) {
  std::array<cplx, 4> a{};
  std::copy(s.amps().begin(), s.amps().end(), a.begin());
  return a;
}

template <class Data, class Writer>
void to_file(const Data& data, const std::filesystem::path& path, Writer writer) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open '" + path.string() + "' for writing");
  writer(data, f);
  f.flush();
  if (!f) throw Error("failed writing '" + path.string() + "'");
}

void require_trajectory(const Trajectory& t) {
  if (t.states.empty() || t.states.size() != t.ionization.size())
    throw PreconditionError("trajectory output needs a non-empty trajectory");
}

void require_profile(const FanoProfile& p) {
  if (p.deltas.empty() || p.deltas.size() != p.ionization.size())
    throw PreconditionError("profile output needs a non-empty profile");
}

// --- SVG -------------------------------------------------------------------

struct Series {
  std::string label;
  std::string colour;
  std::vector<double> y;
};

constexpr double kWidth = 720, kHeight = 440;
constexpr double kLeft = 70, kRight = 170, kTop = 30, kBottom = 60;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

std::string tick_label(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", std::abs(x) < 1e-12 ? 0.0 : x);
  return buf;
}

std::string escape(std::string_view s) {
  std::string r;
  for (char c : s) {
    switch (c) {
      case '&': r += "&amp;"; break;
      case '<': r += "&lt;"; break;
      case '>': r += "&gt;"; break;
      case '"': r += "&quot;"; break;
      default: r += c;
    }
  }
  return r;
}

// Roughly `target` ticks at 1, 2 or 5 times a power of ten.
std::vector<double> nice_ticks(double lo, double hi, int target = 6) {
  const double span = hi - lo;
  const double raw = span / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0})
    if (m * mag >= raw) {
      step = m * mag;
      break;
    }
  std::vector<double> t;
  for (double v = std::ceil(lo / step) * step; v <= hi + 1e-9 * span; v += step) t.push_back(v);
  return t;
}

void plot(std::ostream& out, const std::vector<double>& x, const std::vector<Series>& series, std::string_view xlabel,
          std::string_view ylabel) {
  double xlo = x.front(), xhi = x.back();
  if (!(xhi > xlo)) xhi = xlo + 1.0;
  double ylo = 0.0, yhi = 1.0;
  for (const auto& s : series)
    for (double v : s.y) {
      ylo = std::min(ylo, v);
      yhi = std::max(yhi, v);
    }
  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  auto sx = [&](double v) { return kLeft + (v - xlo) / (xhi - xlo) * pw; };
  auto sy = [&](double v) { return kTop + (1.0 - (v - ylo) / (yhi - ylo)) * ph; };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
  out << "<g stroke=\"black\" stroke-width=\"1\">\n";
  out << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + ph << "\" x2=\"" << kLeft + pw << "\" y2=\"" << kTop + ph
      << "\"/>\n";
  out << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\"" << kTop + ph << "\"/>\n";
  out << "</g>\n";

  out << "<g font-size=\"11\">\n";
  for (double t : nice_ticks(xlo, xhi)) {
    const double px = sx(t);
    out << "<line x1=\"" << num(px) << "\" y1=\"" << kTop + ph << "\" x2=\"" << num(px) << "\" y2=\"" << kTop + ph + 5
        << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << num(px) << "\" y=\"" << kTop + ph + 18 << "\" text-anchor=\"middle\">" << tick_label(t)
        << "</text>\n";
  }
  for (double t : nice_ticks(ylo, yhi, 5)) {
    const double py = sy(t);
    out << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << num(py) << "\" x2=\"" << kLeft << "\" y2=\"" << num(py)
        << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << kLeft - 8 << "\" y=\"" << num(py + 4) << "\" text-anchor=\"end\">" << tick_label(t)
        << "</text>\n";
  }
  out << "</g>\n";
  out << "<text x=\"" << num(kLeft + pw / 2) << "\" y=\"" << kHeight - 15 << "\" text-anchor=\"middle\">"
      << escape(xlabel) << "</text>\n";
  out << "<text x=\"18\" y=\"" << num(kTop + ph / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
      << num(kTop + ph / 2) << ")\">" << escape(ylabel) << "</text>\n";

  for (const auto& s : series) {
    out << "<polyline fill=\"none\" stroke=\"" << s.colour << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (i) out << ' ';
      out << num(sx(x[i])) << ',' << num(sy(s.y[i]));
    }
    out << "\"/>\n";
  }

  out << "<g font-size=\"12\">\n";
  double ly = kTop + 10;
  for (const auto& s : series) {
    const double lx = kLeft + pw + 15;
    out << "<line x1=\"" << lx << "\" y1=\"" << ly << "\" x2=\"" << lx + 25 << "\" y2=\"" << ly << "\" stroke=\""
        << s.colour << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << lx + 32 << "\" y=\"" << ly + 4 << "\">" << escape(s.label) << "</text>\n";
    ly += 20;
  }
  out << "</g>\n</svg>\n";
}

}  // namespace

void write_csv(const Trajectory& traj, std::ostream& out) {
  require_trajectory(traj);
  out << kTrajectoryHeader << '\n';
  for (std::size_t i = 0; i < traj.states.size(); ++i) {
    const auto a = padded(traj.states[i]);
    put(out, traj.states[i].time());
    for (const auto& v : a) {
      out << ',';
      put(out, v.real());
      out << ',';
      put(out, v.imag());
    }
    for (const auto& v : a) {
      out << ',';
      put(out, std::norm(v));
    }
    out << ',';
    put(out, traj.ionization[i]);
    out << '\n';
  }
}

void write_csv(const FanoProfile& profile, std::ostream& out) {
  require_profile(profile);
  out << kProfileHeader << '\n';
  for (std::size_t i = 0; i < profile.deltas.size(); ++i) {
    put(out, profile.deltas[i]);
    out << ',';
    put(out, profile.ionization[i]);
    out << '\n';
  }
}

void write_csv(const Trajectory& traj, const std::filesystem::path& path) {
  require_trajectory(traj);
  to_file(traj, path, [](const Trajectory& t, std::ostream& o) { write_csv(t, o); });
}

void write_csv(const FanoProfile& profile, const std::filesystem::path& path) {
  require_profile(profile);
  to_file(profile, path, [](const FanoProfile& p, std::ostream& o) { write_csv(p, o); });
}

void render_svg(const Trajectory& traj, std::ostream& out) {
  require_trajectory(traj);
  const bool two_level = traj.states.front().basis() == Basis::twolevel2;
  const std::array<std::string, 4> labels = two_level
      ? std::array<std::string, 4>{"|c_g|²", "|c_e|²", "", ""}
      : std::array<std::string, 4>{"|b_g|²", "|b_e|²", "|d_g|²", "|d_e|²"};
  const std::array<std::string, 4> colours = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd"};

  std::vector<double> x;
  for (const auto& s : traj.states) x.push_back(s.time());
  std::vector<Series> series;
  for (std::size_t k = 0; k < traj.states.front().size(); ++k) {
    Series s{labels[k], colours[k], {}};
    double peak = 0.0;
    for (const auto& st : traj.states) {
      s.y.push_back(std::norm(st[k]));
      peak = std::max(peak, s.y.back());
    }
    if (peak > 1e-12) series.push_back(std::move(s));
  }
  series.push_back({"ionization", "black", traj.ionization});
  plot(out, x, series, "t / T", "population");
}

void render_svg(const FanoProfile& profile, std::ostream& out) {
  require_profile(profile);
  plot(out, profile.deltas, {{"ionization", "black", profile.ionization}}, "detuning Δ · T", "ionization");
}

void render_svg(const Trajectory& traj, const std::filesystem::path& path) {
  require_trajectory(traj);
  to_file(traj, path, [](const Trajectory& t, std::ostream& o) { render_svg(t, o); });
}

void render_svg(const FanoProfile& profile, const std::filesystem::path& path) {
  require_profile(profile);
  to_file(profile, path, [](const FanoProfile& p, std::ostream& o) { render_svg(p, o); });
}

}  // namespace lics
