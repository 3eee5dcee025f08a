#include <doctest.h>

#include "qhhl/circuit.hpp"
#include "test_util.hpp"

using namespace qhhl;
namespace tu = qhhl::testutil;

namespace {

// Dense reference for a power-controlled gate on (control, target) = (0, 1):
// sum_j |j><j| (x) g^j.
CMatrix dense_controlled_power(const CMatrix& g, int dim) {
  const int n = dim * dim;
  CMatrix full = CMatrix::Zero(n, n);
  CMatrix pow = CMatrix::Identity(dim, dim);
  for (int j = 0; j < dim; ++j) {
    full.block(j * dim, j * dim, dim, dim) = pow;
    pow = pow * g;
  }
  return full;
}

// Dense reference for a select-controlled gate: identity except the `sel`
// control block, which holds g.
CMatrix dense_select(const CMatrix& g, int dim, int sel) {
  const int n = dim * dim;
  CMatrix full = CMatrix::Identity(n, n);
  full.block(sel * dim, sel * dim, dim, dim) = g;
  return full;
}

} // namespace

TEST_CASE("power-mode control reproduces the dense block construction") {
  for (int dim : {2, 3, 4}) {
    auto gen = tu::rng(31 + dim);
    const CMatrix g = tu::random_unitary(dim, gen);
    Circuit c(dim, 2);
    c.add_controlled_unitary({"G", dim, 1, g}, /*control=*/0, {1}, 1);
    CHECK(tu::max_abs_diff(c.unitary(), dense_controlled_power(g, dim)) <
          1e-12);
  }
}

TEST_CASE("select-mode control fires on exactly one control value") {
  const int dim = 3;
  auto gen = tu::rng(35);
  const CMatrix g = tu::random_unitary(dim, gen);
  for (int sel = 0; sel < dim; ++sel) {
    Circuit c(dim, 2);
    c.add_select_rotation({"G", dim, 1, g}, {0}, sel, 1);
    CHECK(tu::max_abs_diff(c.unitary(), dense_select(g, dim, sel)) < 1e-12);
  }
}

TEST_CASE("controlled phase is symmetric under control/target exchange") {
  const int dim = 3, level = 2;
  Circuit a(dim, 2), b(dim, 2);
  a.add_controlled_phase(0, 1, level);
  b.add_controlled_phase(1, 0, level);
  CHECK(tu::max_abs_diff(a.unitary(), b.unitary()) < 1e-12);
}

TEST_CASE("tallies count instructions by category") {
  const int dim = 3;
  Circuit c(dim, 3);
  c.add_single(h_gate(dim), 0);
  c.add_single(x_gate(dim), 1);
  c.add_controlled_phase(1, 0, 2);
  c.add_swap(0, 2);
  c.add_controlled_unitary({"U", dim, 1, h_gate(dim).matrix}, 0, {1}, 9);
  c.add_select_rotation(planar_rotation(dim, 0, 1, 0.5), {0, 1}, 4, 2);
  const GateTally& t = c.tally();
  CHECK(t.single == 2);
  CHECK(t.controlled_phase == 1);
  CHECK(t.swap == 1);
  CHECK(t.controlled_unitary == 1);
  CHECK(t.cu_power_weight == 9);
  CHECK(t.select_rotation == 1);
  CHECK(t.two_qudit() == 2);
}

TEST_CASE("adjointed circuit inverts the original") {
  auto gen = tu::rng(36);
  const int dim = 3;
  Circuit c(dim, 2);
  c.add_single({"A", dim, 1, tu::random_unitary(dim, gen)}, 0);
  c.add_controlled_phase(0, 1, 2);
  c.add_single({"B", dim, 1, tu::random_unitary(dim, gen)}, 1);
  c.add_swap(0, 1);
  const CMatrix u = c.unitary();
  const CMatrix udg = c.adjointed().unitary();
  CHECK(tu::max_abs_diff(u * udg, CMatrix::Identity(9, 9)) < 1e-12);
  // Tally categories survive adjointing.
  CHECK(c.adjointed().tally().controlled_phase == 1);
  CHECK(c.adjointed().tally().swap == 1);
}

TEST_CASE("extend with an offset relocates a sub-circuit") {
  const int dim = 2;
  Circuit inner(dim, 1);
  inner.add_single(x_gate(dim), 0);
  Circuit outer(dim, 3);
  outer.extend(inner, /*offset=*/2);
  Statevector s = outer.execute(Statevector(dim, 3));
  CHECK(s[1] == cplx{1, 0}); // |001>
}

TEST_CASE("apply_to at a wire offset equals embedding in a larger register") {
  auto gen = tu::rng(37);
  const int dim = 3;
  Circuit c(dim, 2);
  c.add_single({"A", dim, 1, tu::random_unitary(dim, gen)}, 0);
  c.add_controlled_phase(0, 1, 2);
  Statevector big = tu::random_state(dim, 4, gen);
  Statevector manual = big;
  c.apply_to(big, /*wire_offset=*/1);
  Circuit embedded(dim, 4);
  embedded.extend(c, 1);
  embedded.apply_to(manual, 0);
  for (std::int64_t i = 0; i < big.size(); ++i)
    CHECK(std::abs(big[i] - manual[i]) < 1e-13);
}

TEST_CASE("norm is preserved across mixed instruction streams") {
  auto gen = tu::rng(38);
  const int dim = 3;
  Circuit c(dim, 3);
  c.add_single(h_gate(dim), 0);
  c.add_controlled_phase(0, 2, 3);
  c.add_controlled_unitary({"U", dim, 1, tu::random_unitary(dim, gen)}, 1,
                           {2}, 3);
  c.add_select_rotation(planar_rotation(dim, 0, 2, 1.1), {0, 1}, 7, 2);
  c.add_swap(0, 2);
  Statevector s = c.execute(tu::random_state(dim, 3, gen));
  CHECK(s.norm() == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("malformed instructions are rejected") {
  Circuit c(3, 2);
  CHECK_THROWS_AS(c.add_single(h_gate(2), 0), ConfigError);   // dim mismatch
  CHECK_THROWS_AS(c.add_single(h_gate(3), 2), ConfigError);   // wire range
  CHECK_THROWS_AS(c.add_swap(0, 2), ConfigError);
  Instruction bad{h_gate(3), {0}, {1}, ControlMode::None, 0, 1,
                  GateKind::Single};
  CHECK_THROWS_AS(c.append(bad), ConfigError); // controls without a mode
  Statevector wrong(2, 2);
  Circuit ok(3, 2);
  ok.add_single(h_gate(3), 0);
  CHECK_THROWS_AS(ok.apply_to(wrong, 0), ConfigError);
  Statevector small(3, 1);
  CHECK_THROWS_AS(ok.apply_to(small, 0), ConfigError);
}
