// Python bindings for the qudit simulator and linear-system solver.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qhhl/chem.hpp"
#include "qhhl/hhl.hpp"
#include "qhhl/qft.hpp"
#include "qhhl/qpe.hpp"
#include "qhhl/resources.hpp"
#include "qhhl/swap_test.hpp"

namespace py = pybind11;
using namespace qhhl;

PYBIND11_MODULE(_qhhl, m) {
  m.doc() = "Qudit statevector simulator and quantum linear-system solver";

  py::register_exception<DomainError>(m, "DomainError");
  py::register_exception<ConfigError>(m, "ConfigError");
  py::register_exception<ParseError>(m, "FileParseError");
  py::register_exception<PostSelectionError>(m, "PostSelectionError");
  py::register_exception<ConsistencyError>(m, "InternalConsistencyError");

  py::class_<Statevector>(m, "Statevector")
      .def(py::init<int, int>(), py::arg("dim"), py::arg("n_qudits"))
      .def_static("basis_state", &Statevector::basis_state, py::arg("dim"),
                  py::arg("n_qudits"), py::arg("index"))
      .def_static(
          "amplitude_encode",
          [](int dim, const CVector& v) {
            return Statevector::amplitude_encode(dim, v);
          },
          py::arg("dim"), py::arg("vec"),
          "Returns (state, norm_of_input).")
      .def_static("tensor", &Statevector::tensor)
      .def_property_readonly("dim", &Statevector::dim)
      .def_property_readonly("n_qudits", &Statevector::n_qudits)
      .def_property_readonly("amplitudes",
                             [](const Statevector& s) {
                               return CVector(Eigen::Map<const CVector>(
                                   s.amplitudes().data(), s.size()));
                             })
      .def("norm", &Statevector::norm)
      .def("probability", &Statevector::probability, py::arg("qudit"),
           py::arg("outcome"))
      .def("project", &Statevector::project, py::arg("qudit"),
           py::arg("outcome"))
      .def("inner", &Statevector::inner)
      .def("apply",
           [](Statevector& s, const CMatrix& u, const std::vector<int>& t) {
             s.apply(u, t);
           },
           py::arg("matrix"), py::arg("targets"));

  py::class_<GateSpec>(m, "GateSpec")
      .def_readonly("label", &GateSpec::label)
      .def_readonly("dim", &GateSpec::dim)
      .def_readonly("arity", &GateSpec::arity)
      .def_readonly("matrix", &GateSpec::matrix);

  m.def("x_gate", &x_gate, py::arg("dim"));
  m.def("z_gate", &z_gate, py::arg("dim"));
  m.def("h_gate", &h_gate, py::arg("dim"));
  m.def("phase_gate", &phase_gate, py::arg("dim"), py::arg("level"));
  m.def("planar_rotation", &planar_rotation, py::arg("dim"), py::arg("i"),
        py::arg("j"), py::arg("theta"));
  m.def("swap_gate", &swap_gate, py::arg("dim"));
  m.def("hermitian_evolution",
        py::overload_cast<const CMatrix&, double>(&hermitian_evolution),
        py::arg("matrix"), py::arg("t"));

  py::class_<GateTally>(m, "GateTally")
      .def_readonly("single", &GateTally::single)
      .def_readonly("controlled_phase", &GateTally::controlled_phase)
      .def_readonly("swap", &GateTally::swap)
      .def_readonly("controlled_unitary", &GateTally::controlled_unitary)
      .def_readonly("cu_power_weight", &GateTally::cu_power_weight)
      .def_readonly("select_rotation", &GateTally::select_rotation)
      .def("two_qudit", &GateTally::two_qudit);

  py::class_<Circuit>(m, "Circuit")
      .def_property_readonly("dim", &Circuit::dim)
      .def_property_readonly("n_qudits", &Circuit::n_qudits)
      .def_property_readonly("tally", &Circuit::tally)
      .def("execute", &Circuit::execute)
      .def("unitary", &Circuit::unitary);

  m.def("build_qft", &build_qft, py::arg("dim"), py::arg("n_qudits"));
  m.def("build_iqft", &build_iqft, py::arg("dim"), py::arg("n_qudits"));
  m.def("dft_matrix", &dft_matrix, py::arg("dim"), py::arg("n_qudits"));
  m.def("build_qpe", &build_qpe, py::arg("u"), py::arg("dim"), py::arg("n_r"));

  py::class_<QpeResult>(m, "QpeResult")
      .def_readonly("state", &QpeResult::state)
      .def_readonly("clock_distribution", &QpeResult::clock_distribution)
      .def_readonly("grid_resolution", &QpeResult::grid_resolution);
  m.def("run_qpe", &run_qpe, py::arg("system_state"), py::arg("u"),
        py::arg("n_r"));

  py::enum_<CExpansion>(m, "CExpansion")
      .value("NONE", CExpansion::None)
      .value("TRUNCATE", CExpansion::Truncate);
  py::enum_<UcrBoundary>(m, "UcrBoundary")
      .value("SATURATE", UcrBoundary::Saturate)
      .value("STRICT", UcrBoundary::Strict);

  py::class_<HHLConfig>(m, "HHLConfig")
      .def(py::init<>())
      .def_readwrite("dim", &HHLConfig::dim)
      .def_readwrite("n_r", &HHLConfig::n_r)
      .def_readwrite("t", &HHLConfig::t)
      .def_readwrite("c", &HHLConfig::c)
      .def_readwrite("c_expansion", &HHLConfig::c_expansion)
      .def_readwrite("ucr_boundary", &HHLConfig::ucr_boundary)
      .def_readwrite("plane_i", &HHLConfig::plane_i)
      .def_readwrite("plane_j", &HHLConfig::plane_j);

  py::class_<HHLSolution>(m, "HHLSolution")
      .def_readonly("x_tilde", &HHLSolution::x_tilde)
      .def_readonly("x_vector", &HHLSolution::x_vector)
      .def_readonly("p_success", &HHLSolution::p_success)
      .def_readonly("b_norm", &HHLSolution::b_norm)
      .def_readonly("c_eff", &HHLSolution::c_eff)
      .def_readonly("overlap", &HHLSolution::overlap)
      .def_readonly("clock_width", &HHLSolution::clock_width)
      .def_readonly("system_width", &HHLSolution::system_width);

  m.def("expand_constant", &expand_constant, py::arg("c"), py::arg("base"),
        py::arg("digits"));
  m.def("choose_defaults", &choose_defaults, py::arg("a"), py::arg("dim"),
        py::arg("n_r"));
  m.def("build_ucr", &build_ucr, py::arg("dim"), py::arg("n_r"), py::arg("t"),
        py::arg("c_eff"), py::arg("boundary") = UcrBoundary::Saturate,
        py::arg("plane_i") = 0, py::arg("plane_j") = 1);
  m.def("hhl_solve", &hhl_solve, py::arg("a"), py::arg("b"),
        py::arg("config"));

  py::class_<SwapTestResult>(m, "SwapTestResult")
      .def_readonly("p_zero", &SwapTestResult::p_zero)
      .def_readonly("overlap", &SwapTestResult::overlap);
  m.def("swap_test_overlap", &swap_test_overlap, py::arg("a"), py::arg("b"));

  py::class_<CiHamiltonian>(m, "CiHamiltonian")
      .def(py::init<>())
      .def_readwrite("r", &CiHamiltonian::r)
      .def_readwrite("h", &CiHamiltonian::h)
      .def_readwrite("e_hf", &CiHamiltonian::e_hf)
      .def_readwrite("source", &CiHamiltonian::source);
  py::class_<LccSystem>(m, "LccSystem")
      .def_readonly("a", &LccSystem::a)
      .def_readonly("b", &LccSystem::b)
      .def_readonly("h00", &LccSystem::h00)
      .def_readonly("shifted", &LccSystem::shifted);
  py::class_<EnergyResult>(m, "EnergyResult")
      .def_readonly("r", &EnergyResult::r)
      .def_readonly("e_hf", &EnergyResult::e_hf)
      .def_readonly("e_corr", &EnergyResult::e_corr)
      .def_readonly("e_total", &EnergyResult::e_total)
      .def_readonly("e_lccsd", &EnergyResult::e_lccsd)
      .def_readonly("e_cisd", &EnergyResult::e_cisd)
      .def_readonly("overlap", &EnergyResult::overlap)
      .def_readonly("k_scale", &EnergyResult::k_scale)
      .def_readonly("p_success", &EnergyResult::p_success)
      .def_readonly("ok", &EnergyResult::ok)
      .def_readonly("error", &EnergyResult::error);

  m.def("load_ci_hamiltonian", &load_ci_hamiltonian, py::arg("path"));
  m.def("build_lcc_system", &build_lcc_system, py::arg("ci"),
        py::arg("shift") = true);
  m.def("isometry_prep", &isometry_prep, py::arg("theta"));
  m.def("correlation_energy", &correlation_energy, py::arg("system"),
        py::arg("solution"));
  m.def("evaluate_geometry", &evaluate_geometry, py::arg("ci"),
        py::arg("config"), py::arg("shift") = true);
  m.def("pec_sweep", &pec_sweep, py::arg("curve"), py::arg("config"),
        py::arg("shift") = true);

  m.def("clock_qudits", &clock_qudits, py::arg("precision_decimal_digits"),
        py::arg("dim"));
  m.def("state_qudits", &state_qudits, py::arg("n_amplitudes"),
        py::arg("dim"));
  m.def("lcc_vector_length", &lcc_vector_length, py::arg("n_spin_orbitals"));
  m.def("qpe_cu_applications", &qpe_cu_applications, py::arg("n_r"),
        py::arg("dim"));
  m.def("iqft_two_qudit_count", &iqft_two_qudit_count, py::arg("n_r"));
  m.def("ucr_rotation_count", &ucr_rotation_count, py::arg("n_r"),
        py::arg("dim"));

  py::class_<ResourceEstimate>(m, "ResourceEstimate")
      .def_readonly("dim", &ResourceEstimate::dim)
      .def_readonly("vector_length", &ResourceEstimate::vector_length)
      .def_readonly("state_register", &ResourceEstimate::state_register)
      .def_readonly("clock_register", &ResourceEstimate::clock_register)
      .def_readonly("cu_applications", &ResourceEstimate::cu_applications)
      .def_readonly("iqft_two_qudit", &ResourceEstimate::iqft_two_qudit)
      .def_readonly("rotation_slots", &ResourceEstimate::rotation_slots)
      .def("total_qudits", &ResourceEstimate::total_qudits);
  py::class_<ResourceComparison>(m, "ResourceComparison")
      .def_readonly("n_spin_orbitals", &ResourceComparison::n_spin_orbitals)
      .def_readonly("vector_length", &ResourceComparison::vector_length)
      .def_readonly("binary", &ResourceComparison::binary)
      .def_readonly("ternary", &ResourceComparison::ternary)
      .def("qudit_difference", &ResourceComparison::qudit_difference);
  py::class_<RegisterTableRow>(m, "RegisterTableRow")
      .def_readonly("n_spin_orbitals", &RegisterTableRow::n_spin_orbitals)
      .def_readonly("vector_length", &RegisterTableRow::vector_length)
      .def_readonly("binary_capacity", &RegisterTableRow::binary_capacity)
      .def_readonly("binary_width", &RegisterTableRow::binary_width)
      .def_readonly("ternary_capacity", &RegisterTableRow::ternary_capacity)
      .def_readonly("ternary_width", &RegisterTableRow::ternary_width);

  m.def("estimate_resources", &estimate_resources, py::arg("vector_length"),
        py::arg("dim"), py::arg("precision_decimal_digits"));
  m.def("compare_table", &compare_table, py::arg("ns_values"),
        py::arg("precision_decimal_digits"));
  m.def("register_table", &register_table);
}
