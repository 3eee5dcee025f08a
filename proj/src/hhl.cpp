#include "qhhl/hhl.hpp"

#include <cmath>
#include <numbers>

#include "qhhl/qft.hpp"
#include "qhhl/qpe.hpp"

namespace qhhl {

namespace {
constexpr double kPi = std::numbers::pi;

void check_symmetric(const RMatrix& a, const char* who) {
  if (a.rows() != a.cols())
    throw DomainError(std::string(who) + ": matrix is not square");
  const double dev = (a - a.transpose()).cwiseAbs().maxCoeff();
  if (dev > 1e-10)
    throw DomainError(std::string(who) + ": matrix deviates from symmetric by " +
                      std::to_string(dev));
}

RVector eigenvalues_sorted(const RMatrix& a) {
  Eigen::SelfAdjointEigenSolver<RMatrix> es(a);
  if (es.info() != Eigen::Success)
    throw DomainError("eigendecomposition failed");
  return es.eigenvalues(); // ascending
}

/// Rotation angles for every clock value; theta[0] = 0.
std::vector<double> rotation_angles(int dim, int n_r, double t, double c_eff,
                                    UcrBoundary boundary) {
  const std::int64_t grid = ipow(dim, n_r);
  std::vector<double> thetas(static_cast<size_t>(grid), 0.0);
  for (std::int64_t v = 1; v < grid; ++v) {
    const double lambda_grid =
        2.0 * kPi * static_cast<double>(v) / (static_cast<double>(grid) * t);
    double ratio = c_eff / lambda_grid;
    if (ratio > 1.0) {
      if (boundary == UcrBoundary::Strict && ratio > 1.0 + 1e-12)
        throw DomainError(
            "inversion constant too large: C_eff/lambda_grid(" +
            std::to_string(v) + ") = " + std::to_string(ratio) +
            " exceeds 1; lower C or refine the clock grid");
      ratio = 1.0;
    }
    thetas[static_cast<size_t>(v)] = 2.0 * std::asin(ratio);
  }
  return thetas;
}

} // namespace

double expand_constant(double c, int base, int digits) {
  if (base < 2) throw DomainError("expand_constant: base must be at least 2");
  if (digits < 1) throw DomainError("expand_constant: need at least 1 digit");
  if (c < 0) throw DomainError("expand_constant: value must be non-negative");
  const double scale = std::pow(static_cast<double>(base), digits);
  const double y = c * scale;
  double f = std::floor(y);
  // Snap values a hair under the next step so terminating base-`base`
  // fractions survive the round trip exactly.
  if (f + 1.0 - y < 1e-9 * std::max(1.0, std::fabs(y))) f += 1.0;
  return f / scale;
}

double effective_c(const HHLConfig& config) {
  if (config.c_expansion == CExpansion::None) return config.c;
  // Truncate on the phase scale: eigenvalues enter the clock as
  // lambda*t/(2*pi), so the grid-aligned constant is the truncation of
  // C*t/(2*pi) mapped back.
  const double scale = config.t / (2.0 * kPi);
  const double truncated =
      expand_constant(config.c * scale, config.dim, config.n_r);
  return truncated / scale;
}

HHLConfig choose_defaults(const RMatrix& a, int dim, int n_r) {
  check_symmetric(a, "choose_defaults");
  if (dim < 2) throw DomainError("choose_defaults: dimension must be >= 2");
  if (n_r < 1) throw DomainError("choose_defaults: clock width must be >= 1");
  const RVector lam = eigenvalues_sorted(a);
  if (lam[0] <= 0)
    throw DomainError("choose_defaults: matrix is not positive-definite "
                      "(smallest eigenvalue " + std::to_string(lam[0]) + ")");
  const double grid = static_cast<double>(ipow(dim, n_r));
  const double g = (grid - 1.0) / grid;
  HHLConfig cfg;
  cfg.dim = dim;
  cfg.n_r = n_r;
  cfg.t = 2.0 * kPi * g / lam[lam.size() - 1];
  // C shares the eigenvalue scale with lambda_grid(v) in the rotation
  // ratios; lambda_min is the largest choice that clamps no populated slot.
  cfg.c = lam[0];
  return cfg;
}

Circuit build_ucr(int dim, int n_r, double t, double c_eff,
                  UcrBoundary boundary, int plane_i, int plane_j) {
  if (n_r < 1) throw ConfigError("ucr: clock register needs at least one wire");
  if (t <= 0) throw DomainError("ucr: evolution time must be positive");
  if (c_eff <= 0) throw DomainError("ucr: inversion constant must be positive");
  const std::vector<double> thetas =
      rotation_angles(dim, n_r, t, c_eff, boundary);
  Circuit c(dim, n_r + 1);
  std::vector<int> controls(n_r);
  for (int i = 0; i < n_r; ++i) controls[i] = i;
  for (std::int64_t v = 0; v < static_cast<std::int64_t>(thetas.size()); ++v)
    c.add_select_rotation(
        planar_rotation(dim, plane_i, plane_j, thetas[static_cast<size_t>(v)]),
        controls, v, /*target=*/n_r);
  return c;
}

HHLSolution hhl_solve(const RMatrix& a, const RVector& b,
                      const HHLConfig& config) {
  check_symmetric(a, "hhl_solve");
  const int dim = config.dim;
  const int n_r = config.n_r;
  if (dim < 2) throw ConfigError("hhl_solve: dimension must be >= 2");
  if (n_r < 1) throw ConfigError("hhl_solve: clock width must be >= 1");
  if (config.t <= 0) throw ConfigError("hhl_solve: evolution time must be positive");
  if (config.c <= 0) throw ConfigError("hhl_solve: inversion constant must be positive");
  if (config.plane_i == config.plane_j || config.plane_i < 0 ||
      config.plane_j < 0 || config.plane_i >= dim || config.plane_j >= dim)
    throw ConfigError("hhl_solve: invalid ancilla rotation plane");
  if (b.size() != a.rows())
    throw ConfigError("hhl_solve: right-hand side length " +
                      std::to_string(b.size()) + " does not match matrix");

  const RVector lam = eigenvalues_sorted(a);
  if (lam[0] <= 0)
    throw DomainError("hhl_solve: matrix eigenvalue " +
                      std::to_string(lam[0]) + " is not strictly positive");
  for (Eigen::Index k = 0; k < lam.size(); ++k) {
    const double phase = lam[k] * config.t / (2.0 * kPi);
    if (phase <= 0 || phase >= 1.0)
      throw ConfigError("hhl_solve: eigenvalue " + std::to_string(lam[k]) +
                        " has phase " + std::to_string(phase) +
                        " outside (0, 1); adjust t");
  }

  const double c_eff = effective_c(config);
  if (c_eff <= 0)
    throw ConfigError("hhl_solve: inversion constant truncates to zero on an "
                      "n_r = " + std::to_string(n_r) + " grid; raise C or n_r");

  // Pad the system to a full register; the padding block is decoupled
  // (diagonal lambda_max), so padded amplitudes stay exactly zero.
  const Eigen::Index n_in = a.rows();
  int m = 1;
  while (ipow(dim, m) < n_in) ++m;
  const std::int64_t msize = ipow(dim, m);
  RMatrix a_pad = RMatrix::Identity(msize, msize) * lam[lam.size() - 1];
  a_pad.topLeftCorner(n_in, n_in) = a;

  auto [b_state, b_norm] = Statevector::amplitude_encode(dim, b);

  const CMatrix u = hermitian_evolution(a_pad, config.t);
  const Circuit qpe = build_qpe(u, dim, n_r);

  // Register: system (wires 0..m-1), clock (m..m+n_r-1), ancilla (m+n_r).
  Statevector state =
      Statevector::tensor(b_state, Statevector(dim, n_r + 1));
  qpe.apply_to(state, 0);

  // Eigenvalue-inversion rotations, executed as one fused block-diagonal
  // pass over the clock+ancilla block instead of dim^n_r sequential gates.
  {
    const std::vector<double> thetas = rotation_angles(
        dim, n_r, config.t, c_eff, config.ucr_boundary);
    const std::int64_t grid = ipow(dim, n_r);
    const int pi_ = config.plane_i, pj_ = config.plane_j;
    for (std::int64_t idx = 0; idx < state.size(); ++idx) {
      if (idx % dim != pi_) continue; // ancilla is the last wire (stride 1)
      const std::int64_t v = (idx / dim) % grid;
      const double th = thetas[static_cast<size_t>(v)];
      if (th == 0.0) continue;
      const std::int64_t partner = idx + (pj_ - pi_);
      const double cth = std::cos(th / 2), sth = std::sin(th / 2);
      const cplx ai = state[idx], aj = state[partner];
      state[idx] = cth * ai - sth * aj;
      state[partner] = sth * ai + cth * aj;
    }
  }

  qpe.adjointed().apply_to(state, 0);

  const int ancilla = m + n_r;
  const double p_success = state.probability(ancilla, config.plane_j);
  if (p_success < 1e-24)
    throw PostSelectionError(
        "hhl_solve: the ancilla flag outcome has vanishing probability");

  // Solution slice: clock = 0, ancilla = flag level.
  const std::int64_t grid = ipow(dim, n_r);
  RVector slice(n_in);
  double imag_norm = 0, real_norm = 0;
  for (Eigen::Index i = 0; i < n_in; ++i) {
    const cplx amp = state[static_cast<std::int64_t>(i) * grid * dim +
                           config.plane_j];
    slice[i] = amp.real();
    real_norm += amp.real() * amp.real();
    imag_norm += amp.imag() * amp.imag();
  }
  if (real_norm < 1e-300)
    throw PostSelectionError("hhl_solve: solution slice is empty");
  if (std::sqrt(imag_norm) > 1e-8 * std::sqrt(real_norm))
    throw ConsistencyError("hhl_solve: solution slice has a non-real "
                           "component beyond tolerance");

  HHLSolution sol;
  sol.x_tilde = slice / std::sqrt(real_norm);
  sol.x_vector = sol.x_tilde * (b_norm * std::sqrt(p_success) / c_eff);
  sol.p_success = p_success;
  sol.b_norm = b_norm;
  sol.c_eff = c_eff;
  sol.overlap = std::fabs(sol.x_tilde.dot(b) / b_norm);
  sol.clock_width = n_r;
  sol.system_width = m;
  return sol;
}

} // namespace qhhl
