#include "qhhl/resources.hpp"

#include <cmath>

#include "qhhl/error.hpp"
#include "qhhl/statevector.hpp"

namespace qhhl {

int clock_qudits(int precision_decimal_digits, int dim) {
  if (precision_decimal_digits < 1)
    throw DomainError("clock_qudits: need at least one decimal digit");
  if (dim < 2) throw DomainError("clock_qudits: dimension must be >= 2");
  const double exact =
      precision_decimal_digits * std::log(10.0) / std::log(double(dim));
  // Guard against ceil(x) jumping a step when x is within rounding error of
  // an integer.
  const double snapped = std::round(exact);
  if (std::fabs(exact - snapped) < 1e-9) return static_cast<int>(snapped);
  return static_cast<int>(std::ceil(exact));
}

int state_qudits(std::int64_t n_amplitudes, int dim) {
  if (n_amplitudes < 1)
    throw DomainError("state_qudits: vector length must be positive");
  if (dim < 2) throw DomainError("state_qudits: dimension must be >= 2");
  int m = 1;
  while (ipow(dim, m) < n_amplitudes) ++m;
  return m;
}

std::int64_t lcc_vector_length(int n_spin_orbitals) {
  if (n_spin_orbitals < 1)
    throw DomainError("lcc_vector_length: orbital count must be positive");
  const std::int64_t n = n_spin_orbitals;
  return n * n * n * n;
}

std::int64_t qpe_cu_applications(int n_r, int dim) {
  if (n_r < 1) throw DomainError("qpe_cu_applications: clock width must be >= 1");
  if (dim < 2) throw DomainError("qpe_cu_applications: dimension must be >= 2");
  return (ipow(dim, n_r) - 1) / (dim - 1);
}

std::int64_t iqft_two_qudit_count(int n_r) {
  if (n_r < 1) throw DomainError("iqft_two_qudit_count: clock width must be >= 1");
  const std::int64_t n = n_r;
  return n * (n - 1) / 2 + n / 2;
}

std::int64_t ucr_rotation_count(int n_r, int dim) {
  if (n_r < 1) throw DomainError("ucr_rotation_count: clock width must be >= 1");
  if (dim < 2) throw DomainError("ucr_rotation_count: dimension must be >= 2");
  return ipow(dim, n_r);
}

ResourceEstimate estimate_resources(std::int64_t vector_length, int dim,
                                    int precision_decimal_digits) {
  ResourceEstimate est;
  est.dim = dim;
  est.vector_length = vector_length;
  est.state_register = state_qudits(vector_length, dim);
  est.clock_register = clock_qudits(precision_decimal_digits, dim);
  est.cu_applications = qpe_cu_applications(est.clock_register, dim);
  est.iqft_two_qudit = iqft_two_qudit_count(est.clock_register);
  est.rotation_slots = ucr_rotation_count(est.clock_register, dim);
  return est;
}

std::vector<ResourceComparison> compare_table(const std::vector<int>& ns_values,
                                              int precision_decimal_digits) {
  std::vector<ResourceComparison> out;
  out.reserve(ns_values.size());
  for (int ns : ns_values) {
    ResourceComparison row;
    row.n_spin_orbitals = ns;
    row.vector_length = lcc_vector_length(ns);
    row.binary = estimate_resources(row.vector_length, 2,
                                    precision_decimal_digits);
    row.ternary = estimate_resources(row.vector_length, 3,
                                     precision_decimal_digits);
    out.push_back(row);
  }
  return out;
}

std::vector<RegisterTableRow> register_table() {
  std::vector<RegisterTableRow> rows;
  for (int ns = 2; ns <= 20; ns += 2) {
    RegisterTableRow row;
    row.n_spin_orbitals = ns;
    row.vector_length = lcc_vector_length(ns);
    row.binary_width = state_qudits(row.vector_length, 2);
    row.binary_capacity = ipow(2, row.binary_width);
    row.ternary_width = state_qudits(row.vector_length, 3);
    row.ternary_capacity = ipow(3, row.ternary_width);
    rows.push_back(row);
  }
  return rows;
}

} // namespace qhhl
