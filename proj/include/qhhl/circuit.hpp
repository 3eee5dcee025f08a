#pragma once

#include <cstdint>
#include <vector>

#include "qhhl/gates.hpp"

namespace qhhl {

/// How an instruction's control wire(s) modulate the gate.
enum class ControlMode {
  None,   ///< no control; plain gate on the targets
  Power,  ///< single control wire; digit j applies gate^j
  Select, ///< gate fires only when the control digits equal select_value
};

/// Bookkeeping category for resource tallies.
enum class GateKind {
  Single,            ///< one-wire uncontrolled gate
  ControlledPhase,   ///< power-controlled phase gate (QFT ladder)
  Swap,              ///< two-wire swap
  ControlledUnitary, ///< power-controlled multi-wire unitary (QPE step)
  SelectRotation,    ///< select-controlled rotation (eigenvalue inversion slot)
};

struct Instruction {
  GateSpec gate;
  std::vector<int> targets;  ///< wires the gate acts on, most significant first
  std::vector<int> controls; ///< empty unless mode != None
  ControlMode mode = ControlMode::None;
  std::int64_t select_value = 0; ///< Select mode: joint control digits value
  std::int64_t power_weight = 1; ///< Power mode: gate = base^power_weight
  GateKind kind = GateKind::Single;
};

/// Per-category gate counts accumulated as instructions are appended.
struct GateTally {
  std::int64_t single = 0;
  std::int64_t controlled_phase = 0;
  std::int64_t swap = 0;
  std::int64_t controlled_unitary = 0;
  std::int64_t cu_power_weight = 0; ///< sum of power weights of CU steps
  std::int64_t select_rotation = 0;
  /// Two-qudit gates in the Fourier-transform sense (phase ladder + swaps).
  std::int64_t two_qudit() const { return controlled_phase + swap; }
};

/// An ordered list of instructions on `n_qudits` wires of dimension `dim`,
/// with running per-category tallies.  Execution applies dense kernels wire
/// by wire; no dim^n x dim^n matrix is formed.
class Circuit {
public:
  Circuit(int dim, int n_qudits) : dim_(dim), n_(n_qudits) {}

  int dim() const { return dim_; }
  int n_qudits() const { return n_; }
  const std::vector<Instruction>& instructions() const { return instr_; }
  const GateTally& tally() const { return tally_; }

  void append(Instruction instr);

  /// Convenience wrappers ------------------------------------------------
  void add_single(const GateSpec& g, int wire);
  void add_swap(int a, int b);
  /// Power-controlled phase gate (control digit j applies P_level^j).
  void add_controlled_phase(int control, int target, int level,
                            bool inverse = false);
  /// Power-controlled unitary on a multi-wire target; `power_weight` is the
  /// exponent the base unitary was raised to before appending.
  void add_controlled_unitary(const GateSpec& g, int control,
                              const std::vector<int>& targets,
                              std::int64_t power_weight);
  /// Select-controlled rotation slot.
  void add_select_rotation(const GateSpec& g, const std::vector<int>& controls,
                           std::int64_t select_value, int target);

  /// Appends all of `other`'s instructions with wires shifted by `offset`.
  void extend(const Circuit& other, int offset = 0);

  /// Reversed instruction list with every gate conjugate-transposed.
  Circuit adjointed() const;

  /// Executes in place.
  void apply_to(Statevector& state, int wire_offset = 0) const;
  Statevector execute(Statevector state) const;

  /// Dense unitary of the whole circuit (column j = circuit applied to |j>).
  /// Intended for small registers in tests.
  CMatrix unitary() const;

private:
  int dim_;
  int n_;
  std::vector<Instruction> instr_;
  GateTally tally_;
};

} // namespace qhhl
