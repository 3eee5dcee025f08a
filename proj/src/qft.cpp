#include "qhhl/qft.hpp"

#include <cmath>
#include <numbers>

namespace qhhl {

Circuit build_qft(int dim, int n_qudits) {
  if (n_qudits < 1) throw ConfigError("qft: need at least one wire");
  Circuit c(dim, n_qudits);
  const GateSpec h = h_gate(dim);
  // Wire i accumulates the phase 0.j_i j_{i+1} ... j_{n-1} (base dim): a
  // Fourier gate contributes the leading digit, then each deeper digit l-1
  // steps below feeds a power-controlled P_l.
  for (int i = 0; i < n_qudits; ++i) {
    c.add_single(h, i);
    for (int l = 2; l <= n_qudits - i; ++l)
      c.add_controlled_phase(/*control=*/i + l - 1, /*target=*/i, l);
  }
  // The accumulated digits come out in reversed significance order.
  for (int i = 0; i < n_qudits / 2; ++i) c.add_swap(i, n_qudits - 1 - i);
  return c;
}

Circuit build_iqft(int dim, int n_qudits) {
  return build_qft(dim, n_qudits).adjointed();
}

CMatrix dft_matrix(int dim, int n_qudits) {
  const std::int64_t size = ipow(dim, n_qudits);
  const double w = 2.0 * std::numbers::pi / static_cast<double>(size);
  const double s = 1.0 / std::sqrt(static_cast<double>(size));
  CMatrix f(size, size);
  for (std::int64_t k = 0; k < size; ++k)
    for (std::int64_t j = 0; j < size; ++j)
      f(k, j) = std::polar(s, w * static_cast<double>((j * k) % size));
  return f;
}

} // namespace qhhl
