#include <doctest.h>

#include <numbers>

#include "qhhl/qft.hpp"
#include "qhhl/qpe.hpp"
#include "test_util.hpp"

using namespace qhhl;
namespace tu = qhhl::testutil;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("QFT circuit equals the DFT matrix") {
  for (int dim : {2, 3}) {
    const int n_max = dim == 2 ? 4 : 3;
    for (int n = 1; n <= n_max; ++n) {
      CAPTURE(dim);
      CAPTURE(n);
      const Circuit qft = build_qft(dim, n);
      CHECK(tu::max_abs_diff(qft.unitary(), dft_matrix(dim, n)) < 1e-9);
      // Gate counts: n singles, n(n-1)/2 controlled phases, floor(n/2) swaps.
      CHECK(qft.tally().single == n);
      CHECK(qft.tally().controlled_phase == n * (n - 1) / 2);
      CHECK(qft.tally().swap == n / 2);
    }
  }
}

TEST_CASE("inverse QFT is the adjoint with identical gate counts") {
  for (int dim : {2, 3}) {
    const int n = 3;
    const Circuit iqft = build_iqft(dim, n);
    CHECK(tu::max_abs_diff(iqft.unitary(),
                           CMatrix(dft_matrix(dim, n).adjoint())) < 1e-9);
    CHECK(iqft.tally().controlled_phase == n * (n - 1) / 2);
    CHECK(iqft.tally().swap == n / 2);
    CHECK(iqft.tally().single == n);
  }
}

TEST_CASE("phase estimation is exact on grid-aligned eigenphases") {
  for (int dim : {2, 3}) {
    const int n_r = 3;
    const std::int64_t grid = ipow(dim, n_r);
    // Diagonal unitary: phase v*/grid on level 1 of a one-wire system.
    const std::int64_t vstar = grid / 2 + 1;
    CMatrix u = CMatrix::Identity(dim, dim);
    u(1, 1) = std::polar(1.0, 2 * kPi * double(vstar) / double(grid));
    const Statevector sys = Statevector::basis_state(dim, 1, 1);
    const QpeResult res = run_qpe(sys, u, n_r);
    CHECK(res.grid_resolution == doctest::Approx(1.0 / double(grid)));
    CHECK(res.clock_distribution[size_t(vstar)] >= 1.0 - 1e-9);
    // The system register stays the eigenvector: the full state is
    // |1> (x) |vstar> up to phase.
    const std::int64_t idx = 1 * grid + vstar;
    CHECK(std::abs(res.state[idx]) == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("phase estimation superposes clock peaks per eigencomponent") {
  const int dim = 3, n_r = 2;
  const std::int64_t grid = 9;
  CMatrix u = CMatrix::Zero(dim, dim);
  u(0, 0) = std::polar(1.0, 2 * kPi * 2.0 / 9.0);
  u(1, 1) = std::polar(1.0, 2 * kPi * 5.0 / 9.0);
  u(2, 2) = std::polar(1.0, 2 * kPi * 7.0 / 9.0);
  Statevector sys(3, 1);
  sys.amplitudes() = {cplx(0.6, 0), cplx(0.0, 0.8), cplx(0, 0)};
  const QpeResult res = run_qpe(sys, u, n_r);
  CHECK(res.clock_distribution[2] == doctest::Approx(0.36).epsilon(1e-9));
  CHECK(res.clock_distribution[5] == doctest::Approx(0.64).epsilon(1e-9));
  double rest = 0;
  for (size_t v = 0; v < size_t(grid); ++v)
    if (v != 2 && v != 5) rest += res.clock_distribution[v];
  CHECK(rest < 1e-12);
}

TEST_CASE("off-grid phases leak across neighboring clock values") {
  // Phase 1/2 is not a ternary grid point: on a 9-slot clock it lands
  // between v = 4 and v = 5 and the distribution spreads.
  const int dim = 3, n_r = 2;
  CMatrix u = CMatrix::Identity(dim, dim);
  u(1, 1) = std::polar(1.0, 2 * kPi * 0.5);
  const QpeResult res =
      run_qpe(Statevector::basis_state(dim, 1, 1), u, n_r);
  CHECK(res.clock_distribution[4] > 0.1);
  CHECK(res.clock_distribution[5] > 0.1);
  CHECK(res.clock_distribution[4] < 1.0 - 1e-9);
  double total = 0;
  for (double p : res.clock_distribution) total += p;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("intermediate states: uniform clock, then per-value phase ramp") {
  // Eigenvector input: after the Fourier layer the clock is uniform; after
  // the controlled powers, clock value v carries phase exp(2*pi*i*phi*v).
  const int dim = 3, n_r = 2, grid = 9;
  const double phi = 4.0 / 9.0;
  CMatrix u = CMatrix::Identity(dim, dim);
  u(0, 0) = std::polar(1.0, 2 * kPi * phi); // eigenvector |0>
  Statevector state =
      Statevector::tensor(Statevector(dim, 1), Statevector(dim, n_r));
  const CMatrix h = h_gate(dim).matrix;
  state.apply(h, {1});
  state.apply(h, {2});
  for (int v = 0; v < grid; ++v)
    CHECK(std::abs(state[v] - cplx(1.0 / 3.0, 0)) < 1e-12);
  // Controlled powers, least significant clock wire drives u^(3^0).
  state.apply_controlled_power(u, {0}, 2);
  state.apply_controlled_power(unitary_power(u, 3), {0}, 1);
  for (int v = 0; v < grid; ++v) {
    const cplx expect = std::polar(1.0 / 3.0, 2 * kPi * phi * v);
    CHECK(std::abs(state[v] - expect) < 1e-12);
  }
  // The inverse transform concentrates on v = phi*grid exactly.
  build_iqft(dim, n_r).apply_to(state, 1);
  CHECK(std::abs(state[4]) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("clock register counts controlled-power weights geometrically") {
  for (int dim : {2, 3}) {
    for (int n_r : {1, 2, 4}) {
      const CMatrix u = CMatrix::Identity(dim, dim);
      const Circuit c = build_qpe(u, dim, n_r);
      CHECK(c.tally().controlled_unitary == n_r);
      CHECK(c.tally().cu_power_weight ==
            (ipow(dim, n_r) - 1) / (dim - 1));
    }
  }
}

TEST_CASE("phase estimation rejects bad operators") {
  CMatrix notu = CMatrix::Identity(3, 3) * 2.0;
  CHECK_THROWS_AS(build_qpe(notu, 3, 2), ConfigError);
  CMatrix wrong_size = CMatrix::Identity(5, 5);
  CHECK_THROWS_AS(build_qpe(wrong_size, 3, 2), ConfigError);
  CHECK_THROWS_AS(build_qpe(CMatrix::Identity(3, 3), 3, 0), ConfigError);
  Statevector sys(2, 1);
  CHECK_THROWS_AS(run_qpe(sys, CMatrix::Identity(4, 4), 2), ConfigError);
}
