#include <doctest.h>

#include <numbers>

#include "qhhl/gates.hpp"
#include "test_util.hpp"

using namespace qhhl;
namespace tu = qhhl::testutil;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("shift and clock gates have the cyclic-group structure") {
  for (int d : {2, 3, 5}) {
    const CMatrix x = x_gate(d).matrix;
    const CMatrix z = z_gate(d).matrix;
    CHECK(is_unitary(x));
    CHECK(is_unitary(z));
    // X|k> = |k+1 mod d>
    for (int k = 0; k < d; ++k) CHECK(x((k + 1) % d, k) == cplx{1, 0});
    // X^d = Z^d = I
    CHECK(tu::max_abs_diff(unitary_power(x, d), CMatrix::Identity(d, d)) <
          1e-12);
    CHECK(tu::max_abs_diff(unitary_power(z, d), CMatrix::Identity(d, d)) <
          1e-12);
    // Weyl commutation: Z X = w X Z.
    const cplx w = std::polar(1.0, 2 * kPi / d);
    CHECK(tu::max_abs_diff(z * x, w * (x * z)) < 1e-12);
  }
}

TEST_CASE("Fourier gate: entries, unitarity, and conjugation to the clock") {
  for (int d : {2, 3, 4}) {
    const CMatrix h = h_gate(d).matrix;
    CHECK(is_unitary(h));
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        CHECK(std::abs(h(j, k) - std::polar(1.0 / std::sqrt(double(d)),
                                            2 * kPi * j * k / d)) < 1e-12);
    // H X H^-1 = Z exactly (diagonalizes the shift).
    CHECK(tu::max_abs_diff(h * x_gate(d).matrix * h.adjoint(),
                           z_gate(d).matrix) < 1e-12);
  }
  // Self-inverse only at d = 2.
  const CMatrix h2 = h_gate(2).matrix;
  CHECK(tu::max_abs_diff(h2 * h2, CMatrix::Identity(2, 2)) < 1e-12);
  const CMatrix h3 = h_gate(3).matrix;
  CHECK(tu::max_abs_diff(h3 * h3, CMatrix::Identity(3, 3)) > 0.5);
  CHECK(tu::max_abs_diff(h3 * h3.adjoint(), CMatrix::Identity(3, 3)) < 1e-12);
}

TEST_CASE("phase ladder: P_1 equals the clock gate, deeper levels nest") {
  for (int d : {2, 3}) {
    CHECK(tu::max_abs_diff(phase_gate(d, 1).matrix, z_gate(d).matrix) < 1e-12);
    // P_l^d = P_{l-1}
    for (int l = 2; l <= 3; ++l)
      CHECK(tu::max_abs_diff(unitary_power(phase_gate(d, l).matrix, d),
                             phase_gate(d, l - 1).matrix) < 1e-12);
  }
  CHECK_THROWS_AS(phase_gate(3, 0), DomainError);
}

TEST_CASE("planar rotations act in one two-level subspace") {
  const double theta = 0.7;
  const GateSpec r = planar_rotation(3, 0, 2, theta);
  CHECK(is_unitary(r.matrix));
  // Column 0: cos(t/2)|0> + sin(t/2)|2>; level 1 untouched.
  CHECK(r.matrix(0, 0).real() == doctest::Approx(std::cos(theta / 2)));
  CHECK(r.matrix(2, 0).real() == doctest::Approx(std::sin(theta / 2)));
  CHECK(r.matrix(0, 2).real() == doctest::Approx(-std::sin(theta / 2)));
  CHECK(r.matrix(1, 1) == cplx{1, 0});
  CHECK(r.matrix(1, 0) == cplx{0, 0});
  // Zero angle is the identity.
  CHECK(tu::max_abs_diff(planar_rotation(3, 0, 1, 0).matrix,
                         CMatrix::Identity(3, 3)) == 0.0);
  // Composition adds angles within one plane.
  CHECK(tu::max_abs_diff(
            planar_rotation(3, 0, 1, 0.3).matrix *
                planar_rotation(3, 0, 1, 0.4).matrix,
            planar_rotation(3, 0, 1, 0.7).matrix) < 1e-12);
  CHECK_THROWS_AS(planar_rotation(3, 1, 1, 0.5), DomainError);
  CHECK_THROWS_AS(planar_rotation(3, 0, 3, 0.5), DomainError);
}

TEST_CASE("swap gate exchanges two wires of any dimension") {
  for (int d : {2, 3}) {
    const CMatrix sw = swap_gate(d).matrix;
    CHECK(is_unitary(sw));
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) CHECK(sw(b * d + a, a * d + b) == cplx{1, 0});
    CHECK(tu::max_abs_diff(sw * sw, CMatrix::Identity(d * d, d * d)) < 1e-12);
  }
}

TEST_CASE("hermitian evolution is unitary and composes in time") {
  auto gen = tu::rng(21);
  RVector ev(4);
  ev << 0.3, 0.7, 1.1, 1.9;
  const RMatrix a = tu::symmetric_with_spectrum(ev, gen);
  const CMatrix u1 = hermitian_evolution(a, 0.8);
  const CMatrix u2 = hermitian_evolution(a, 1.3);
  const CMatrix u12 = hermitian_evolution(a, 2.1);
  CHECK(is_unitary(u1));
  CHECK(tu::max_abs_diff(u1 * u2, u12) < 1e-12);
  CHECK(tu::max_abs_diff(hermitian_evolution(a, 0.0),
                         CMatrix::Identity(4, 4)) < 1e-12);
  // Eigenvectors pick up exactly exp(i*lambda*t).
  Eigen::SelfAdjointEigenSolver<RMatrix> es(a);
  for (int k = 0; k < 4; ++k) {
    const CVector v = es.eigenvectors().col(k).cast<cplx>();
    const CVector uv = u1 * v;
    const cplx expect = std::polar(1.0, es.eigenvalues()[k] * 0.8);
    CHECK((uv - expect * v).cwiseAbs().maxCoeff() < 1e-12);
  }
  // Non-Hermitian input is rejected.
  CMatrix bad = CMatrix::Zero(2, 2);
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(hermitian_evolution(bad, 1.0), DomainError);
}

TEST_CASE("integer unitary powers match repeated multiplication") {
  auto gen = tu::rng(22);
  const CMatrix u = tu::random_unitary(3, gen);
  CMatrix ref = CMatrix::Identity(3, 3);
  for (int p = 0; p <= 12; ++p) {
    CHECK(tu::max_abs_diff(unitary_power(u, p), ref) < 1e-11);
    ref = ref * u;
  }
  CHECK_THROWS_AS(unitary_power(u, -1), DomainError);
}

TEST_CASE("adjoint reverses a gate") {
  auto gen = tu::rng(23);
  const GateSpec g{"G", 3, 1, tu::random_unitary(3, gen)};
  const GateSpec gdg = adjoint(g);
  CHECK(tu::max_abs_diff(g.matrix * gdg.matrix, CMatrix::Identity(3, 3)) <
        1e-12);
  CHECK(gdg.label == "G+");
}
