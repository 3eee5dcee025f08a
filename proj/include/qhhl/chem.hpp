#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhhl/hhl.hpp"

namespace qhhl {

/// A configuration-interaction Hamiltonian at one molecular geometry:
/// reference determinant in row/column 0, excited determinants after.
struct CiHamiltonian {
  double r = 0;                ///< internuclear distance (bohr)
  RMatrix h;                   ///< (M+1) x (M+1) symmetric CI matrix
  std::optional<double> e_hf;  ///< Hartree-Fock reference energy, if given
  std::string source;          ///< originating file (diagnostics only)
};

/// The linear system of the linearized coupled-cluster correlation problem:
/// A = H[1:,1:] - H[0][0]*I (shift optional), b = -H[1:,0].
struct LccSystem {
  RMatrix a;
  RVector b;
  double h00 = 0;             ///< reference diagonal element
  bool shifted = true;        ///< whether the H[0][0] shift was applied
  std::string source;
};

/// Reads a CI Hamiltonian file: `dim <M+1>`, `R <bohr>`, optional
/// `ehf <hartree>`, then M+1 whitespace-separated matrix rows.  `#` starts a
/// comment.  Throws ParseError with the offending line number.
CiHamiltonian load_ci_hamiltonian(const std::string& path);

/// Builds the correlation linear system.  Throws DomainError when the shifted
/// block is not positive-definite (message names the smallest eigenvalue) or
/// when b vanishes (diagonal H), and ConsistencyError if b^T A^-1 b < 0.
LccSystem build_lcc_system(const CiHamiltonian& ci, bool shift = true);

/// One-qutrit trial-state preparation: planar rotation in the (0, 2) plane on
/// |0>, giving cos(theta/2)|0> + sin(theta/2)|2>.
Statevector isometry_prep(double theta);

struct EnergyResult {
  double r = 0;
  std::optional<double> e_hf;
  double e_corr = 0;    ///< quantum estimate, always <= 0
  std::optional<double> e_total; ///< e_hf + e_corr when e_hf is known
  double e_lccsd = 0;   ///< classical direct solve: -b^T A^-1 b
  std::optional<double> e_cisd; ///< lowest CI eigenvalue minus H[0][0]
  double overlap = 0;   ///< |<b_hat|x_tilde>|
  double k_scale = 0;   ///< prefactor ||x_un|| * ||b||
  double p_success = 0;
  bool ok = true;
  std::string error;    ///< set when ok is false
};

/// Correlation energy from a solved linear system:
///   E_corr = -k * |<b_hat|x_tilde>|,  k = ||x_un|| * ||b||,
///   ||x_un|| = ||b|| * sqrt(p_success) / C_eff.
/// Cross-checked against -b_un . x_vector; drift beyond 1e-8 throws
/// ConsistencyError.
double correlation_energy(const LccSystem& sys, const HHLSolution& sol);

/// Full single-geometry evaluation: solve + energies + classical benchmarks.
EnergyResult evaluate_geometry(const CiHamiltonian& ci, const HHLConfig& config,
                               bool shift = true);

/// Potential-energy-curve sweep over many geometries, sorted by R.  Per-item
/// failures are captured in the result rows (ok = false), not thrown.
std::vector<EnergyResult> pec_sweep(const std::vector<CiHamiltonian>& curve,
                                    const HHLConfig& config, bool shift = true);

} // namespace qhhl
