#pragma once

#include "qhhl/circuit.hpp"

namespace qhhl {

/// Quantum Fourier transform on `n_qudits` wires of dimension `dim`:
/// per-wire Fourier gates, the power-controlled phase ladder, and the final
/// digit-reversal swaps.  The resulting unitary is the DFT matrix
/// F[k][j] = exp(2*pi*i*j*k/D)/sqrt(D) with D = dim^n_qudits.
/// Gate counts: n single, n(n-1)/2 controlled-phase, floor(n/2) swaps.
Circuit build_qft(int dim, int n_qudits);

/// Inverse transform: the adjoint circuit, same gate counts.
Circuit build_iqft(int dim, int n_qudits);

/// Dense DFT matrix for cross-checks.
CMatrix dft_matrix(int dim, int n_qudits);

} // namespace qhhl
