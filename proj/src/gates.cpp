#include "qhhl/gates.hpp"

#include <cmath>
#include <numbers>

namespace qhhl {

namespace {
constexpr double kPi = std::numbers::pi;

void check_dim(int dim) {
  if (dim < 2) throw DomainError("gate: dimension must be at least 2");
}
} // namespace

GateSpec x_gate(int dim) {
  check_dim(dim);
  CMatrix m = CMatrix::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) m((k + 1) % dim, k) = 1.0;
  return {"X", dim, 1, std::move(m)};
}

GateSpec z_gate(int dim) {
  check_dim(dim);
  CMatrix m = CMatrix::Zero(dim, dim);
  for (int k = 0; k < dim; ++k)
    m(k, k) = std::polar(1.0, 2.0 * kPi * k / dim);
  return {"Z", dim, 1, std::move(m)};
}

GateSpec h_gate(int dim) {
  check_dim(dim);
  CMatrix m(dim, dim);
  const double s = 1.0 / std::sqrt(static_cast<double>(dim));
  for (int j = 0; j < dim; ++j)
    for (int k = 0; k < dim; ++k)
      m(j, k) = std::polar(s, 2.0 * kPi * j * k / dim);
  return {"H", dim, 1, std::move(m)};
}

GateSpec phase_gate(int dim, int level) {
  check_dim(dim);
  if (level < 1) throw DomainError("phase gate: level must be at least 1");
  CMatrix m = CMatrix::Zero(dim, dim);
  const double denom = std::pow(static_cast<double>(dim), level);
  for (int k = 0; k < dim; ++k)
    m(k, k) = std::polar(1.0, 2.0 * kPi * k / denom);
  return {"P" + std::to_string(level), dim, 1, std::move(m)};
}

GateSpec planar_rotation(int dim, int i, int j, double theta) {
  check_dim(dim);
  if (i < 0 || i >= dim || j < 0 || j >= dim || i == j)
    throw DomainError("planar rotation: levels (" + std::to_string(i) + ", " +
                      std::to_string(j) + ") invalid for dimension " +
                      std::to_string(dim));
  CMatrix m = CMatrix::Identity(dim, dim);
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  m(i, i) = c;
  m(j, j) = c;
  m(i, j) = -s;
  m(j, i) = s;
  return {"R" + std::to_string(i) + std::to_string(j), dim, 1, std::move(m)};
}

GateSpec swap_gate(int dim) {
  check_dim(dim);
  const int d2 = dim * dim;
  CMatrix m = CMatrix::Zero(d2, d2);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) m(b * dim + a, a * dim + b) = 1.0;
  return {"SWAP", dim, 2, std::move(m)};
}

GateSpec adjoint(const GateSpec& g) {
  return {g.label + "+", g.dim, g.arity, g.matrix.adjoint()};
}

CMatrix hermitian_evolution(const CMatrix& a, double t) {
  if (a.rows() != a.cols())
    throw DomainError("hermitian_evolution: matrix is not square");
  const double dev = (a - a.adjoint()).cwiseAbs().maxCoeff();
  if (dev > 1e-10)
    throw DomainError("hermitian_evolution: matrix deviates from Hermitian "
                      "by " + std::to_string(dev));
  Eigen::SelfAdjointEigenSolver<CMatrix> es((a + a.adjoint()) / 2.0);
  if (es.info() != Eigen::Success)
    throw DomainError("hermitian_evolution: eigendecomposition failed");
  CVector phases(a.rows());
  for (Eigen::Index k = 0; k < a.rows(); ++k)
    phases[k] = std::polar(1.0, es.eigenvalues()[k] * t);
  return es.eigenvectors() * phases.asDiagonal() *
         es.eigenvectors().adjoint();
}

CMatrix hermitian_evolution(const RMatrix& a, double t) {
  return hermitian_evolution(CMatrix(a.cast<cplx>()), t);
}

CMatrix unitary_power(const CMatrix& u, std::int64_t p) {
  if (p < 0) throw DomainError("unitary_power: negative exponent");
  CMatrix result = CMatrix::Identity(u.rows(), u.cols());
  CMatrix base = u;
  while (p > 0) {
    if (p & 1) result = result * base;
    p >>= 1;
    if (p > 0) base = base * base;
  }
  return result;
}

bool is_unitary(const CMatrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  const CMatrix id = CMatrix::Identity(u.rows(), u.cols());
  return (u.adjoint() * u - id).cwiseAbs().maxCoeff() <= tol;
}

} // namespace qhhl
