#pragma once

#include <optional>

#include "qhhl/circuit.hpp"

namespace qhhl {

/// How the inversion constant C is aligned with the clock grid before the
/// rotation angles are computed.
enum class CExpansion {
  None,     ///< use C as given
  Truncate, ///< truncate C to n_r base-dim fractional digits on the phase
            ///< scale: C_eff = floor(C * (t/2pi) * dim^n_r) / dim^n_r
            ///< * (2pi/t)
};

/// Handling of rotation slots whose angle argument C_eff/lambda_grid(v)
/// exceeds 1 (slots below the smallest resolvable eigenvalue).
enum class UcrBoundary {
  Saturate, ///< clamp the argument to 1 (rotate fully onto the flag level)
  Strict,   ///< refuse: throw DomainError naming the offending slot
};

struct HHLConfig {
  int dim = 3;    ///< qudit dimension of every register
  int n_r = 3;    ///< clock register width
  double t = 0.0; ///< evolution time of exp(i*A*t)
  double c = 0.0; ///< inversion constant C
  CExpansion c_expansion = CExpansion::None;
  UcrBoundary ucr_boundary = UcrBoundary::Saturate;
  int plane_i = 0; ///< rotation plane source level (initial flag level)
  int plane_j = 1; ///< rotation plane target level (success flag level)
};

struct HHLSolution {
  RVector x_tilde;  ///< normalized solution direction (length = input size)
  RVector x_vector; ///< rescaled classical solution estimate
  double p_success = 0; ///< probability of the flag outcome
  double b_norm = 0;    ///< Euclidean norm of the input right-hand side
  double c_eff = 0;     ///< inversion constant actually used
  double overlap = 0;   ///< |<b_hat|x_tilde>|
  int clock_width = 0;
  int system_width = 0;
};

/// Truncates `c` to `digits` base-`base` fractional digits:
/// floor(c * base^digits) / base^digits, with a guard that snaps values within
/// 1e-9 below the next representable step up to it, so terminating fractions
/// round-trip exactly.  Requires base >= 2, digits >= 1, c >= 0.
double expand_constant(double c, int base, int digits);

/// Suggested (t, C) for a positive-definite A: t = 2*pi*g/lambda_max with
/// g = (dim^n_r - 1)/dim^n_r (largest eigenphase lands on the top grid line),
/// and C = lambda_min — C is compared against the grid eigenvalues
/// lambda_grid(v) in the rotation ratios, so it lives on the eigenvalue
/// scale, and lambda_min is the largest value that clamps no populated slot.
/// Throws DomainError when A is not symmetric positive-definite.
HHLConfig choose_defaults(const RMatrix& a, int dim, int n_r);

/// Eigenvalue-inversion block: a circuit on n_r clock wires plus one ancilla
/// (wire n_r), containing one select-controlled rotation slot per clock value
/// v in [0, dim^n_r): angle theta_v = 2*asin(min(1, C_eff/lambda_grid(v)))
/// with lambda_grid(v) = 2*pi*v/(dim^n_r * t), and theta_0 = 0 (the v = 0
/// slot stays an identity rotation but is still emitted, so the slot count is
/// exactly dim^n_r).  UcrBoundary::Strict instead throws DomainError on the
/// first slot whose ratio exceeds 1.
Circuit build_ucr(int dim, int n_r, double t, double c_eff,
                  UcrBoundary boundary = UcrBoundary::Saturate,
                  int plane_i = 0, int plane_j = 1);

/// Solves A x = b through the quantum linear-system pipeline on a dense
/// statevector simulation: amplitude-encode b, phase estimation with
/// exp(i*A*t), eigenvalue-inversion rotations on the ancilla, inverse phase
/// estimation, post-selection on the ancilla flag level.
///
///   x_tilde  = state slice (clock = 0, ancilla = flag), renormalized
///   x_vector = b_norm * sqrt(p_success) / C_eff * x_tilde
///
/// A must be symmetric with strictly positive eigenvalues and every
/// eigenphase lambda*t/(2*pi) inside (0, 1); violations throw ConfigError
/// naming the offending eigenvalue.  Throws PostSelectionError when the flag
/// outcome has vanishing probability.
HHLSolution hhl_solve(const RMatrix& a, const RVector& b,
                      const HHLConfig& config);

/// Effective inversion constant after applying `c_expansion`.
double effective_c(const HHLConfig& config);

} // namespace qhhl
