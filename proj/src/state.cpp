#include "lics/state.hpp"

#include <algorithm>

#include "lics/errors.hpp"

namespace lics {

std::string_view to_string(Basis b) noexcept {
  switch (b) {
    case Basis::original4: return "original4";
    case Basis::brightdark4: return "brightdark4";
    case Basis::bright2: return "bright2";
    case Basis::twolevel2: return "twolevel2";
  }
  return "?";
}

State::State(Basis basis, double time) : basis_(basis), time_(time) {}

State::State(Basis basis, std::span<const cplx> amps, double time) : State(basis, time) {
  if (amps.size() != size())
    throw UsageError("State: basis " + std::string(to_string(basis)) + " needs " + std::to_string(size()) +
                     " amplitudes");
  std::copy(amps.begin(), amps.end(), amps_.begin());
}

double State::norm2() const noexcept {
  double s = 0.0;
  for (const auto& a : amps()) s += std::norm(a);
  return s;
}

}  // namespace lics

namespace lics {

double ionization(const State& s) noexcept {
  const double v = 1.0 - s.norm2();
  return (v < 0.0 && v >= -1e-9) ? 0.0 : v;
}

}  // namespace lics
