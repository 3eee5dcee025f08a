#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qhhl/error.hpp"

namespace qhhl {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Dense state vector of `n_qudits` qudits, all of the same dimension `dim`.
///
/// Digit convention: qudit 0 is the most significant digit of the basis-state
/// index, i.e. basis index = sum_q digit(q) * dim^(n_qudits-1-q).  Mixed
/// dimensions within one register are not supported; composing registers of
/// different dimensions is done by the caller choosing one dim per register.
class Statevector {
public:
  /// |0...0> on `n_qudits` qudits of dimension `dim`.
  Statevector(int dim, int n_qudits);

  /// Computational basis state |index> (index decoded most significant digit
  /// first).  Throws DomainError if index is out of range.
  static Statevector basis_state(int dim, int n_qudits, std::int64_t index);

  /// Normalizes `vec`, zero-pads it to the next power of `dim`, and returns
  /// the resulting state together with the original Euclidean norm of `vec`.
  /// Throws DomainError on a zero vector.
  static std::pair<Statevector, double> amplitude_encode(int dim,
                                                         const CVector& vec);
  static std::pair<Statevector, double> amplitude_encode(int dim,
                                                         const RVector& vec);

  /// Tensor product: `a` occupies the high-order wires, `b` the low-order
  /// ones.  Both must have the same dim.
  static Statevector tensor(const Statevector& a, const Statevector& b);

  int dim() const { return dim_; }
  int n_qudits() const { return n_; }
  std::int64_t size() const { return static_cast<std::int64_t>(amp_.size()); }
  cplx& operator[](std::int64_t i) { return amp_[static_cast<size_t>(i)]; }
  const cplx& operator[](std::int64_t i) const {
    return amp_[static_cast<size_t>(i)];
  }
  const std::vector<cplx>& amplitudes() const { return amp_; }
  std::vector<cplx>& amplitudes() { return amp_; }

  double norm() const;
  /// Index stride of one unit of `qudit`'s digit.
  std::int64_t stride(int qudit) const;
  /// Digit of `qudit` within basis index `index`.
  int digit(std::int64_t index, int qudit) const;

  /// Applies a unitary on an ordered list of target wires.  `u` is
  /// (dim^k x dim^k) with row/column indices decoding the target digits most
  /// significant first, in the order given by `targets`.  The state is
  /// updated in place with strided gather/scatter; no dim^n x dim^n matrix is
  /// ever formed.  Throws ConfigError on bad wires or a size mismatch.
  void apply(const CMatrix& u, const std::vector<int>& targets);

  /// Applies `u` on `targets` only on the subspace where the digits of
  /// `controls` spell the base-dim value `select` (controls ordered most
  /// significant first).  Identity elsewhere.
  void apply_select(const CMatrix& u, const std::vector<int>& targets,
                    const std::vector<int>& controls, std::int64_t select);

  /// Power-mode control: when the digit of `control` is j, applies u^j to
  /// `targets`.  The powers u^0..u^(dim-1) are formed once per call.
  void apply_controlled_power(const CMatrix& u, const std::vector<int>& targets,
                              int control);

  /// Probability that measuring `qudit` yields `outcome`.
  double probability(int qudit, int outcome) const;

  /// Projects `qudit` onto `outcome` and renormalizes.  Returns the outcome
  /// probability and the conditional state.  Throws PostSelectionError when
  /// the probability vanishes.
  std::pair<double, Statevector> project(int qudit, int outcome) const;

  /// <*this|other> (conjugate-linear in *this).
  cplx inner(const Statevector& other) const;

private:
  void check_wire(int w) const;
  int dim_;
  int n_;
  std::vector<cplx> amp_;
};

/// dim^exp as a 64-bit integer; throws DomainError on overflow.
std::int64_t ipow(std::int64_t base, int exp);

} // namespace qhhl
