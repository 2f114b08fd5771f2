#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string_view>

#include "lics/cmatrix.hpp"

namespace lics {

inline constexpr double kInvSqrt2 = 0.70710678118654752440;

enum class Basis {
  original4,    // (c_g1, c_g2, c_e1, c_e2)
  brightdark4,  // (b_g, b_e, d_g, d_e)
  bright2,      // (b_g, b_e)
  twolevel2,    // (c_g, c_e)
};

constexpr std::size_t basis_size(Basis b) noexcept {
  return (b == Basis::original4 || b == Basis::brightdark4) ? 4 : 2;
}

std::string_view to_string(Basis b) noexcept;

/// Complex amplitudes tagged with the basis they are expressed in.
class State {
 public:
  explicit State(Basis basis, double time = 0.0);
  State(Basis basis, std::span<const cplx> amps, double time = 0.0);

  Basis basis() const noexcept { return basis_; }
  std::size_t size() const noexcept { return basis_size(basis_); }
  double time() const noexcept { return time_; }
  void set_time(double t) noexcept { time_ = t; }

  std::span<cplx> amps() noexcept { return {amps_.data(), size()}; }
  std::span<const cplx> amps() const noexcept { return {amps_.data(), size()}; }
  cplx& operator[](std::size_t i) noexcept { return amps_[i]; }
  const cplx& operator[](std::size_t i) const noexcept { return amps_[i]; }

  /// Σ|amp|².
  double norm2() const noexcept;

  bool operator==(const State&) const = default;

 private:
  Basis basis_;
  double time_;
  std::array<cplx, kMaxDim> amps_{};
};

}  // namespace lics

namespace lics {

/// 1 - Σ|amp|², the population lost to the continuum. Values in [-1e-9, 0)
/// are reported as 0; anything more negative is returned unchanged.
double ionization(const State& s) noexcept;

}  // namespace lics
