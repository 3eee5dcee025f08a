#pragma once

#include <string>

#include "qhhl/statevector.hpp"

namespace qhhl {

/// A named unitary acting on `arity` wires of dimension `dim`.
/// `matrix` is (dim^arity x dim^arity), row/column indices decoding the wire
/// digits most significant first.
struct GateSpec {
  std::string label;
  int dim = 0;
  int arity = 1;
  CMatrix matrix;
};

/// Cyclic increment: X|k> = |k+1 mod d>.
GateSpec x_gate(int dim);

/// Clock gate: Z|k> = w^k |k> with w = exp(2*pi*i/d).
GateSpec z_gate(int dim);

/// Fourier gate: H[j][k] = w^(j*k)/sqrt(d).  Self-inverse only for d = 2; its
/// inverse is the conjugate transpose.
GateSpec h_gate(int dim);

/// Phase ladder: P_l|k> = exp(2*pi*i*k/d^l)|k>.  P_1 equals Z.
GateSpec phase_gate(int dim, int level);

/// Planar rotation in the (i, j) two-level subspace:
///   |i> -> cos(t/2)|i> + sin(t/2)|j>,  |j> -> -sin(t/2)|i> + cos(t/2)|j>,
/// identity on all other levels.  Requires 0 <= i, j < dim and i != j.
GateSpec planar_rotation(int dim, int i, int j, double theta);

/// Two-wire swap gate.
GateSpec swap_gate(int dim);

/// Conjugate transpose of a gate.
GateSpec adjoint(const GateSpec& g);

/// exp(i*A*t) for Hermitian A, computed through the eigendecomposition so the
/// result is unitary to machine precision.  Throws DomainError if A deviates
/// from Hermitian by more than 1e-10 in max norm.
CMatrix hermitian_evolution(const CMatrix& a, double t);
CMatrix hermitian_evolution(const RMatrix& a, double t);

/// u^p for integer p >= 0 via successive d-th powers in base `dim`
/// (u^(d^k) built by repeated multiplication, then combined per digit of p).
CMatrix unitary_power(const CMatrix& u, std::int64_t p);

bool is_unitary(const CMatrix& u, double tol = 1e-10);

} // namespace qhhl
