#include "qhhl/qpe.hpp"

#include "qhhl/qft.hpp"

namespace qhhl {

Circuit build_qpe(const CMatrix& u, int dim, int n_r) {
  if (n_r < 1) throw ConfigError("qpe: clock register needs at least one wire");
  if (!is_unitary(u))
    throw ConfigError("qpe: the evolution operator is not unitary");
  int m = 0;
  std::int64_t cap = 1;
  while (cap < u.rows()) {
    cap *= dim;
    ++m;
  }
  if (cap != u.rows() || m == 0)
    throw ConfigError("qpe: operator size " + std::to_string(u.rows()) +
                      " is not a positive power of dim " +
                      std::to_string(dim));

  Circuit c(dim, m + n_r);
  std::vector<int> system(m);
  for (int i = 0; i < m; ++i) system[i] = i;

  const GateSpec h = h_gate(dim);
  for (int k = 0; k < n_r; ++k) c.add_single(h, m + k);

  // Controlled powers: clock wire m+n_r-1-k (the k-th least significant
  // digit) drives u^(dim^k), built by successive dim-th powers.
  CMatrix upow = u;
  for (int k = 0; k < n_r; ++k) {
    GateSpec g{"U^" + std::to_string(ipow(dim, k)), dim, m, upow};
    c.add_controlled_unitary(g, /*control=*/m + n_r - 1 - k, system,
                             /*power_weight=*/ipow(dim, k));
    if (k + 1 < n_r) {
      CMatrix next = upow;
      for (int rep = 1; rep < dim; ++rep) next = next * upow;
      upow = std::move(next);
    }
  }

  c.extend(build_iqft(dim, n_r), /*offset=*/m);
  return c;
}

QpeResult run_qpe(const Statevector& system_state, const CMatrix& u, int n_r) {
  const int dim = system_state.dim();
  Circuit c = build_qpe(u, dim, n_r);
  const int m = c.n_qudits() - n_r;
  if (m != system_state.n_qudits())
    throw ConfigError("qpe: system register width does not match operator");
  Statevector state =
      Statevector::tensor(system_state, Statevector(dim, n_r));
  c.apply_to(state, 0);

  const std::int64_t grid = ipow(dim, n_r);
  std::vector<double> dist(static_cast<size_t>(grid), 0.0);
  for (std::int64_t i = 0; i < state.size(); ++i)
    dist[static_cast<size_t>(i % grid)] += std::norm(state[i]);
  return {std::move(state), std::move(dist), 1.0 / static_cast<double>(grid)};
}

} // namespace qhhl
