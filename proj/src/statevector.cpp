#include "qhhl/statevector.hpp"

#include <cmath>

namespace qhhl {

std::int64_t ipow(std::int64_t base, int exp) {
  if (base < 0 || exp < 0) throw DomainError("ipow: negative base or exponent");
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > (std::int64_t{1} << 62) / (base > 0 ? base : 1))
      throw DomainError("ipow: 64-bit overflow");
    r *= base;
  }
  return r;
}

Statevector::Statevector(int dim, int n_qudits) : dim_(dim), n_(n_qudits) {
  if (dim < 2) throw DomainError("statevector: dimension must be at least 2");
  if (n_qudits < 1) throw DomainError("statevector: need at least one qudit");
  amp_.assign(static_cast<size_t>(ipow(dim, n_qudits)), cplx{0, 0});
  amp_[0] = 1.0;
}

Statevector Statevector::basis_state(int dim, int n_qudits,
                                     std::int64_t index) {
  Statevector s(dim, n_qudits);
  if (index < 0 || index >= s.size())
    throw DomainError("basis_state: index " + std::to_string(index) +
                      " out of range for " + std::to_string(s.size()) +
                      " amplitudes");
  s.amp_[0] = 0.0;
  s.amp_[static_cast<size_t>(index)] = 1.0;
  return s;
}

static std::pair<Statevector, double> encode_impl(int dim, const CVector& vec) {
  if (vec.size() == 0) throw DomainError("amplitude_encode: empty vector");
  double nrm = vec.norm();
  if (nrm < 1e-300)
    throw DomainError("amplitude_encode: zero vector cannot be encoded");
  int n = 1;
  while (ipow(dim, n) < vec.size()) ++n;
  Statevector s(dim, n);
  s.amplitudes().assign(static_cast<size_t>(s.size()), cplx{0, 0});
  for (Eigen::Index i = 0; i < vec.size(); ++i)
    s[static_cast<std::int64_t>(i)] = vec[i] / nrm;
  return {std::move(s), nrm};
}

std::pair<Statevector, double> Statevector::amplitude_encode(
    int dim, const CVector& vec) {
  return encode_impl(dim, vec);
}

std::pair<Statevector, double> Statevector::amplitude_encode(
    int dim, const RVector& vec) {
  return encode_impl(dim, vec.cast<cplx>());
}

Statevector Statevector::tensor(const Statevector& a, const Statevector& b) {
  if (a.dim() != b.dim())
    throw ConfigError("tensor: registers must share the qudit dimension");
  Statevector out(a.dim(), a.n_qudits() + b.n_qudits());
  out.amp_.assign(static_cast<size_t>(out.size()), cplx{0, 0});
  for (std::int64_t i = 0; i < a.size(); ++i) {
    if (a[i] == cplx{0, 0}) continue;
    for (std::int64_t j = 0; j < b.size(); ++j)
      out[i * b.size() + j] = a[i] * b[j];
  }
  return out;
}

double Statevector::norm() const {
  double s = 0;
  for (const auto& z : amp_) s += std::norm(z);
  return std::sqrt(s);
}

std::int64_t Statevector::stride(int qudit) const {
  check_wire(qudit);
  return ipow(dim_, n_ - 1 - qudit);
}

int Statevector::digit(std::int64_t index, int qudit) const {
  return static_cast<int>((index / stride(qudit)) % dim_);
}

void Statevector::check_wire(int w) const {
  if (w < 0 || w >= n_)
    throw ConfigError("wire index " + std::to_string(w) +
                      " out of range for " + std::to_string(n_) + " qudits");
}

namespace {

// Enumerates every basis index whose digits at `wires` are all zero and whose
// digits at fixed positions match; calls f(base) for each.
template <typename F>
void for_each_block_base(std::int64_t total, int dim,
                         const std::vector<std::int64_t>& wire_strides,
                         const std::vector<std::pair<std::int64_t, int>>& fixed,
                         F&& f) {
  for (std::int64_t idx = 0; idx < total; ++idx) {
    bool base = true;
    for (auto s : wire_strides)
      if ((idx / s) % dim != 0) {
        base = false;
        break;
      }
    if (!base) continue;
    for (auto [s, val] : fixed)
      if ((idx / s) % dim != val) {
        base = false;
        break;
      }
    if (base) f(idx);
  }
}

} // namespace

void Statevector::apply(const CMatrix& u, const std::vector<int>& targets) {
  apply_select(u, targets, {}, 0);
}

void Statevector::apply_select(const CMatrix& u,
                               const std::vector<int>& targets,
                               const std::vector<int>& controls,
                               std::int64_t select) {
  if (targets.empty()) throw ConfigError("apply: no target wires");
  const std::int64_t block = ipow(dim_, static_cast<int>(targets.size()));
  if (u.rows() != block || u.cols() != block)
    throw ConfigError("apply: matrix is " + std::to_string(u.rows()) + "x" +
                      std::to_string(u.cols()) + " but the target block is " +
                      std::to_string(block));
  std::vector<std::int64_t> strides;
  strides.reserve(targets.size());
  for (int w : targets) strides.push_back(stride(w));
  // Detect duplicate wires across targets+controls.
  {
    std::vector<int> all(targets);
    all.insert(all.end(), controls.begin(), controls.end());
    for (size_t i = 0; i < all.size(); ++i)
      for (size_t j = i + 1; j < all.size(); ++j)
        if (all[i] == all[j])
          throw ConfigError("apply: duplicate wire " + std::to_string(all[i]));
  }
  // Offset of each in-block combination c (digits of c drive the targets
  // most significant first).
  std::vector<std::int64_t> offsets(static_cast<size_t>(block), 0);
  for (std::int64_t c = 0; c < block; ++c) {
    std::int64_t rem = c, off = 0;
    for (size_t q = targets.size(); q-- > 0;) {
      off += (rem % dim_) * strides[q];
      rem /= dim_;
    }
    offsets[static_cast<size_t>(c)] = off;
  }
  std::vector<std::pair<std::int64_t, int>> fixed;
  if (!controls.empty()) {
    std::int64_t rem = select;
    for (size_t q = controls.size(); q-- > 0;) {
      fixed.emplace_back(stride(controls[q]), static_cast<int>(rem % dim_));
      rem /= dim_;
    }
    if (rem != 0)
      throw ConfigError("apply: select value out of range for control block");
  }
  std::vector<cplx> in(static_cast<size_t>(block));
  for_each_block_base(size(), dim_, strides, fixed, [&](std::int64_t base) {
    for (std::int64_t c = 0; c < block; ++c)
      in[static_cast<size_t>(c)] = amp_[static_cast<size_t>(base + offsets[c])];
    for (std::int64_t r = 0; r < block; ++r) {
      cplx acc{0, 0};
      for (std::int64_t c = 0; c < block; ++c)
        acc += u(r, c) * in[static_cast<size_t>(c)];
      amp_[static_cast<size_t>(base + offsets[r])] = acc;
    }
  });
}

void Statevector::apply_controlled_power(const CMatrix& u,
                                         const std::vector<int>& targets,
                                         int control) {
  check_wire(control);
  // u^0 is the identity; apply u^j on the digit-j slice for j = 1..dim-1.
  CMatrix p = u;
  for (int j = 1; j < dim_; ++j) {
    apply_select(p, targets, {control}, j);
    if (j + 1 < dim_) p = p * u;
  }
}

double Statevector::probability(int qudit, int outcome) const {
  check_wire(qudit);
  if (outcome < 0 || outcome >= dim_)
    throw DomainError("probability: outcome " + std::to_string(outcome) +
                      " is not a level of a dim-" + std::to_string(dim_) +
                      " qudit");
  const std::int64_t s = stride(qudit);
  double p = 0;
  for (std::int64_t i = 0; i < size(); ++i)
    if ((i / s) % dim_ == outcome) p += std::norm(amp_[static_cast<size_t>(i)]);
  return p;
}

std::pair<double, Statevector> Statevector::project(int qudit,
                                                    int outcome) const {
  const double p = probability(qudit, outcome);
  if (p < 1e-24)
    throw PostSelectionError(
        "projection onto outcome " + std::to_string(outcome) + " of qudit " +
        std::to_string(qudit) + " has vanishing probability");
  Statevector out = *this;
  const std::int64_t s = stride(qudit);
  const double scale = 1.0 / std::sqrt(p);
  for (std::int64_t i = 0; i < size(); ++i) {
    if ((i / s) % dim_ == outcome)
      out.amp_[static_cast<size_t>(i)] *= scale;
    else
      out.amp_[static_cast<size_t>(i)] = 0.0;
  }
  return {p, std::move(out)};
}

cplx Statevector::inner(const Statevector& other) const {
  if (dim_ != other.dim_ || n_ != other.n_)
    throw ConfigError("inner product: register shapes differ");
  cplx acc{0, 0};
  for (std::int64_t i = 0; i < size(); ++i)
    acc += std::conj(amp_[static_cast<size_t>(i)]) *
           other.amp_[static_cast<size_t>(i)];
  return acc;
}

} // namespace qhhl
