#pragma once

#include "lics/cmatrix.hpp"

namespace lics {

/// Physical inputs of the four-state model, all rates and shifts in units of
/// 1/T (T = 1). The ground/excited cross coupling is always derived as
/// sqrt(gamma_g * gamma_e) and is never stored.
struct Params {
  double gamma_g = 0.0;  // ground-level ionization rate
  double gamma_e = 0.0;  // excited-level ionization rate
  double stark_g = 0.0;
  double stark_e = 0.0;
  double q_gg = 0.0;
  double q_ee = 0.0;
  double q_eg = 0.0;
  double delta = 0.0;    // reduced two-photon detuning
  double shift_g = 0.0;  // splitting inside the ground level (non-degenerate model only)
  double shift_e = 0.0;  // splitting inside the excited level

  double gamma_eg() const;

  /// Throws DomainError when a rate is negative or any field is non-finite.
  void validate() const;

  bool operator==(const Params&) const = default;
};

/// Reference parameter set used throughout the tests and sample configs (delta left at 0).
Params reference_params();
/// Parameter set of the non-degeneracy study, with shift_g = shift_e = 0.2.
Params split_reference_params();

// Basis ordering: (g1, g2, e1, e2) for 4x4 matrices, (g, e) for 2x2.
// Every builder validates its Params and returns a complex-symmetric matrix.

/// H = -1/2 (H0 + i H1) of the degenerate four-state system. Shifts are ignored.
CMatrix effective_hamiltonian(const Params& p);

/// Coupled (bright) block after the rotation/shift transform.
CMatrix bright_hamiltonian(const Params& p);

/// Uncoupled (dark) block; real and diagonal.
CMatrix dark_hamiltonian(const Params& p);

/// Standard two-level LICS Hamiltonian. Its coupling is half the bright one.
CMatrix two_level_hamiltonian(const Params& p);

/// Four-state Hamiltonian with the in-level splittings shift_g (at g2) and
/// shift_e (at e2). Equal to effective_hamiltonian when both shifts vanish.
CMatrix nondegenerate_hamiltonian(const Params& p);

}  // namespace lics
