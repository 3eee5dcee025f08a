#pragma once

// Shared helpers for the unit tests: seeded RNG, random unitaries/states,
// random symmetric matrices with a prescribed spectrum.

#include <complex>
#include <random>

#include "qhhl/statevector.hpp"

namespace qhhl::testutil {

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline CMatrix random_complex(int n, std::mt19937_64& gen) {
  std::normal_distribution<double> nd(0.0, 1.0);
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = cplx(nd(gen), nd(gen));
  return m;
}

/// Haar-ish random unitary via QR of a Gaussian matrix.
inline CMatrix random_unitary(int n, std::mt19937_64& gen) {
  Eigen::HouseholderQR<CMatrix> qr(random_complex(n, gen));
  CMatrix q = qr.householderQ();
  // Fix the phase convention so Q is unambiguous.
  CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i) {
    const cplx d = r(i, i);
    if (std::abs(d) > 1e-30) q.col(i) *= d / std::abs(d);
  }
  return q;
}

/// Random real orthogonal matrix.
inline RMatrix random_orthogonal(int n, std::mt19937_64& gen) {
  std::normal_distribution<double> nd(0.0, 1.0);
  RMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = nd(gen);
  Eigen::HouseholderQR<RMatrix> qr(m);
  RMatrix q = qr.householderQ();
  RMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i)
    if (r(i, i) < 0) q.col(i) = -q.col(i);
  return q;
}

/// Symmetric matrix with the given eigenvalues and a random eigenbasis.
inline RMatrix symmetric_with_spectrum(const RVector& eigenvalues,
                                       std::mt19937_64& gen) {
  const int n = static_cast<int>(eigenvalues.size());
  const RMatrix q = random_orthogonal(n, gen);
  return q * eigenvalues.asDiagonal() * q.transpose();
}

/// Random normalized state on n wires of dimension dim.
inline Statevector random_state(int dim, int n, std::mt19937_64& gen) {
  std::normal_distribution<double> nd(0.0, 1.0);
  Statevector s(dim, n);
  double norm2 = 0;
  for (std::int64_t i = 0; i < s.size(); ++i) {
    s[i] = cplx(nd(gen), nd(gen));
    norm2 += std::norm(s[i]);
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (std::int64_t i = 0; i < s.size(); ++i) s[i] *= scale;
  return s;
}

inline double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

} // namespace qhhl::testutil
