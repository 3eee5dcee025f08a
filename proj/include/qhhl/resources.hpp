#pragma once

#include <cstdint>
#include <vector>

namespace qhhl {

/// Clock qudits needed for p decimal digits of phase precision in base d:
/// ceil(p * log_d(10)).
int clock_qudits(int precision_decimal_digits, int dim);

/// Qudits needed to index an N-amplitude vector: ceil(log_d N), minimum 1.
int state_qudits(std::int64_t n_amplitudes, int dim);

/// Vector length of the correlation linear system for Ns spin orbitals: Ns^4.
std::int64_t lcc_vector_length(int n_spin_orbitals);

/// Controlled-evolution applications in phase estimation with an n_r-wide
/// base-d clock: (d^n_r - 1)/(d - 1) power-weighted steps.
std::int64_t qpe_cu_applications(int n_r, int dim);

/// Two-qudit gates in the clock inverse Fourier transform:
/// n_r(n_r-1)/2 controlled phases + floor(n_r/2) swaps.
std::int64_t iqft_two_qudit_count(int n_r);

/// Eigenvalue-inversion rotation slots: one per clock value, d^n_r.
std::int64_t ucr_rotation_count(int n_r, int dim);

struct ResourceEstimate {
  int dim = 0;
  std::int64_t vector_length = 0;
  int state_register = 0;
  int clock_register = 0;
  std::int64_t cu_applications = 0;
  std::int64_t iqft_two_qudit = 0;
  std::int64_t rotation_slots = 0;
  int total_qudits() const { return state_register + clock_register + 1; }
};

ResourceEstimate estimate_resources(std::int64_t vector_length, int dim,
                                    int precision_decimal_digits);

struct ResourceComparison {
  int n_spin_orbitals = 0;
  std::int64_t vector_length = 0;
  ResourceEstimate binary;  ///< dim 2
  ResourceEstimate ternary; ///< dim 3
  /// binary total qudits minus ternary total qudits.
  int qudit_difference() const {
    return binary.total_qudits() - ternary.total_qudits();
  }
};

/// Binary-versus-ternary register comparison across problem sizes.
std::vector<ResourceComparison> compare_table(const std::vector<int>& ns_values,
                                              int precision_decimal_digits);

/// One row of the orbital-scaling register table: problem size and the
/// state-register widths (with their capacities) in both bases.
struct RegisterTableRow {
  int n_spin_orbitals = 0;
  std::int64_t vector_length = 0; ///< Ns^4
  std::int64_t binary_capacity = 0;  ///< 2^m_b
  int binary_width = 0;              ///< m_b
  std::int64_t ternary_capacity = 0; ///< 3^m_t
  int ternary_width = 0;             ///< m_t
};

/// The standard table for Ns = 2, 4, ..., 20.
std::vector<RegisterTableRow> register_table();

} // namespace qhhl
