#pragma once

#include "qhhl/circuit.hpp"

namespace qhhl {

/// Phase-estimation circuit for unitary `u` acting on a system register of
/// `m` wires, with an `n_r`-wire clock register.  Wire layout: system wires
/// first (high-order digits, wires 0..m-1), clock wires after (low-order,
/// wires m..m+n_r-1); within the clock, wire m is the most significant digit
/// of the estimated phase.  Structure: a Fourier gate on every clock wire,
/// then for k = 0..n_r-1 a power-controlled u^(dim^k) with control on clock
/// wire m+n_r-1-k (least significant digit first), then the inverse Fourier
/// transform on the clock.  Throws ConfigError if `u` is not unitary or its
/// size is not a power of dim.
Circuit build_qpe(const CMatrix& u, int dim, int n_r);

struct QpeResult {
  Statevector state;                      ///< full post-circuit state
  std::vector<double> clock_distribution; ///< P(clock = v), length dim^n_r
  double grid_resolution;                 ///< 1/dim^n_r
};

/// Runs build_qpe on system_state tensor |0...0> clock.
QpeResult run_qpe(const Statevector& system_state, const CMatrix& u, int n_r);

} // namespace qhhl
