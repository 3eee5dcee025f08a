#include "qhhl/circuit.hpp"

#include <algorithm>

namespace qhhl {

void Circuit::append(Instruction instr) {
  if (instr.gate.dim != dim_)
    throw ConfigError("circuit: gate dimension " +
                      std::to_string(instr.gate.dim) +
                      " does not match circuit dimension " +
                      std::to_string(dim_));
  auto check = [&](int w) {
    if (w < 0 || w >= n_)
      throw ConfigError("circuit: wire " + std::to_string(w) +
                        " out of range for " + std::to_string(n_) + " wires");
  };
  for (int w : instr.targets) check(w);
  for (int w : instr.controls) check(w);
  if (instr.mode == ControlMode::None && !instr.controls.empty())
    throw ConfigError("circuit: control wires given without a control mode");
  if (instr.mode == ControlMode::Power && instr.controls.size() != 1)
    throw ConfigError("circuit: power mode takes exactly one control wire");
  if (instr.mode != ControlMode::None && instr.controls.empty())
    throw ConfigError("circuit: control mode set but no control wires");
  switch (instr.kind) {
    case GateKind::Single: tally_.single++; break;
    case GateKind::ControlledPhase: tally_.controlled_phase++; break;
    case GateKind::Swap: tally_.swap++; break;
    case GateKind::ControlledUnitary:
      tally_.controlled_unitary++;
      tally_.cu_power_weight += instr.power_weight;
      break;
    case GateKind::SelectRotation: tally_.select_rotation++; break;
  }
  instr_.push_back(std::move(instr));
}

void Circuit::add_single(const GateSpec& g, int wire) {
  append({g, {wire}, {}, ControlMode::None, 0, 1, GateKind::Single});
}

void Circuit::add_swap(int a, int b) {
  append({swap_gate(dim_), {a, b}, {}, ControlMode::None, 0, 1,
          GateKind::Swap});
}

void Circuit::add_controlled_phase(int control, int target, int level,
                                   bool inverse) {
  GateSpec g = phase_gate(dim_, level);
  if (inverse) g = adjoint(g);
  append({std::move(g), {target}, {control}, ControlMode::Power, 0, 1,
          GateKind::ControlledPhase});
}

void Circuit::add_controlled_unitary(const GateSpec& g, int control,
                                     const std::vector<int>& targets,
                                     std::int64_t power_weight) {
  append({g, targets, {control}, ControlMode::Power, 0, power_weight,
          GateKind::ControlledUnitary});
}

void Circuit::add_select_rotation(const GateSpec& g,
                                  const std::vector<int>& controls,
                                  std::int64_t select_value, int target) {
  append({g, {target}, controls, ControlMode::Select, select_value, 1,
          GateKind::SelectRotation});
}

void Circuit::extend(const Circuit& other, int offset) {
  if (other.dim_ != dim_)
    throw ConfigError("circuit: cannot extend across dimensions");
  for (Instruction instr : other.instr_) {
    for (int& w : instr.targets) w += offset;
    for (int& w : instr.controls) w += offset;
    append(std::move(instr));
  }
}

Circuit Circuit::adjointed() const {
  Circuit out(dim_, n_);
  for (auto it = instr_.rbegin(); it != instr_.rend(); ++it) {
    Instruction instr = *it;
    instr.gate = adjoint(instr.gate);
    out.append(std::move(instr));
  }
  return out;
}

void Circuit::apply_to(Statevector& state, int wire_offset) const {
  if (state.dim() != dim_)
    throw ConfigError("execute: state dimension does not match circuit");
  if (wire_offset < 0 || wire_offset + n_ > state.n_qudits())
    throw ConfigError("execute: circuit does not fit in the register at "
                      "offset " + std::to_string(wire_offset));
  for (const Instruction& instr : instr_) {
    std::vector<int> targets = instr.targets;
    for (int& w : targets) w += wire_offset;
    switch (instr.mode) {
      case ControlMode::None:
        state.apply(instr.gate.matrix, targets);
        break;
      case ControlMode::Power:
        state.apply_controlled_power(instr.gate.matrix, targets,
                                     instr.controls[0] + wire_offset);
        break;
      case ControlMode::Select: {
        std::vector<int> controls = instr.controls;
        for (int& w : controls) w += wire_offset;
        state.apply_select(instr.gate.matrix, targets, controls,
                           instr.select_value);
        break;
      }
    }
  }
}

Statevector Circuit::execute(Statevector state) const {
  apply_to(state, 0);
  return state;
}

CMatrix Circuit::unitary() const {
  const std::int64_t size = ipow(dim_, n_);
  CMatrix u(size, size);
  for (std::int64_t j = 0; j < size; ++j) {
    Statevector col = execute(Statevector::basis_state(dim_, n_, j));
    for (std::int64_t i = 0; i < size; ++i) u(i, j) = col[i];
  }
  return u;
}

} // namespace qhhl
