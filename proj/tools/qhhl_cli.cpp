// Command-line front end: toy linear solves, generic solves from files,
// chemistry potential-energy sweeps, and register/gate resource tables.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qhhl/chem.hpp"
#include "qhhl/hhl.hpp"
#include "qhhl/io.hpp"
#include "qhhl/resources.hpp"

namespace fs = std::filesystem;
using namespace qhhl;

namespace {

constexpr double kPi = std::numbers::pi;

struct CommonOpts {
  int dim = 3;
  int n_r = 0; // 0 = command default
  double t = 0;
  double c = 0;
  bool c_expand = false;
  std::string format = "csv";
  std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_solver_opts = true) {
  if (with_solver_opts) {
    cmd->add_option("--dim", o.dim, "qudit dimension")
        ->check(CLI::IsMember({2, 3}));
    cmd->add_option("--nr", o.n_r, "clock register width")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--t", o.t, "evolution time of exp(iAt)");
    cmd->add_option("--c", o.c, "inversion constant C");
    cmd->add_flag("--c-expand", o.c_expand,
                  "truncate C to nr base-dim digits on the phase grid");
  }
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", o.out, "output path (default stdout)");
}

void emit(const Table& table, const CommonOpts& o) {
  write_output(o.format == "json" ? to_json(table) : to_csv(table), o.out);
}

HHLConfig make_config(const CommonOpts& o, const RMatrix& a, int n_r) {
  HHLConfig cfg;
  if (o.t > 0 && o.c > 0) {
    cfg.dim = o.dim;
    cfg.n_r = n_r;
    cfg.t = o.t;
    cfg.c = o.c;
  } else {
    cfg = choose_defaults(a, o.dim, n_r);
    if (o.t > 0) cfg.t = o.t;
    if (o.c > 0) cfg.c = o.c;
  }
  cfg.c_expansion = o.c_expand ? CExpansion::Truncate : CExpansion::None;
  return cfg;
}

// ----------------------------------------------------------------- toy solves
int run_toy(const std::string& which, CommonOpts o) {
  RMatrix a(3, 3);
  RVector b(3);
  std::vector<int> sweep;
  double default_c;
  if (which == "diag") {
    a << 0.2, 0, 0, 0, 0.5, 0, 0, 0, 0.8;
    b << 1 / std::sqrt(3.0), 1 / std::sqrt(3.0), 1 / std::sqrt(3.0);
    sweep = {3, 4, 5, 6};
    default_c = 0.2;
  } else {
    a << 0.5, 0.1, 0.2, 0.1, 0.6, 0.1, 0.2, 0.1, 0.7;
    b << 0, 1, 0;
    sweep = {2, 3, 4, 5};
    Eigen::SelfAdjointEigenSolver<RMatrix> es(a);
    default_c = es.eigenvalues()[0];
  }
  if (o.n_r > 0) sweep = {o.n_r};
  if (o.t <= 0) o.t = 2 * kPi;
  if (o.c <= 0) o.c = default_c;

  const RVector x_cl = a.ldlt().solve(b);
  const double btx_cl = b.dot(x_cl);

  Table table;
  table.columns = {{"nr", -1},    {"x0", 5},  {"x1", 5},
                   {"x2", 5},     {"btx", 5}, {"btx_classical", 5},
                   {"pfd_percent", 2}};
  bool any_fail = false;
  for (int n_r : sweep) {
    HHLConfig cfg;
    cfg.dim = o.dim;
    cfg.n_r = n_r;
    cfg.t = o.t;
    cfg.c = o.c;
    cfg.c_expansion = o.c_expand ? CExpansion::Truncate : CExpansion::None;
    try {
      const HHLSolution sol = hhl_solve(a, b, cfg);
      const double btx = b.dot(sol.x_vector);
      const double pfd = 100.0 * std::fabs(btx - btx_cl) / std::fabs(btx_cl);
      table.add_row({double(n_r), sol.x_vector[0], sol.x_vector[1],
                     sol.x_vector[2], btx, btx_cl, pfd});
    } catch (const Error& e) {
      any_fail = true;
      table.add_row({double(n_r), 0, 0, 0, 0, btx_cl, 0}, e.what());
    }
  }
  emit(table, o);
  return any_fail ? 1 : 0;
}

// ------------------------------------------------------------- generic solves
int run_solve(const std::string& matrix_path, const std::string& rhs_path,
              const CommonOpts& o) {
  const RMatrix a = load_matrix(matrix_path);
  const RVector b = load_vector(rhs_path);
  const HHLConfig cfg = make_config(o, a, o.n_r > 0 ? o.n_r : 3);
  const HHLSolution sol = hhl_solve(a, b, cfg);
  const RVector x_cl = a.ldlt().solve(b);

  Table table;
  table.columns = {{"index", -1},      {"x_tilde", 6}, {"x_vector", 6},
                   {"x_classical", 6}, {"abs_error", 6}, {"p_success", 6},
                   {"c_eff", 6},       {"overlap", 6}, {"b_norm", 6}};
  for (Eigen::Index i = 0; i < b.size(); ++i)
    table.add_row({double(i), sol.x_tilde[i], sol.x_vector[i], x_cl[i],
                   std::fabs(sol.x_vector[i] - x_cl[i]), sol.p_success,
                   sol.c_eff, sol.overlap, sol.b_norm});
  emit(table, o);
  return 0;
}

// ---------------------------------------------------------- chemistry sweeps
int run_chem(const std::string& dir, double plot_shift, bool has_shift,
             bool no_h00_shift, const CommonOpts& o) {
  std::vector<CiHamiltonian> curve;
  std::vector<fs::path> files;
  if (!fs::is_directory(dir))
    throw ConfigError("chem: not a directory: " + dir);
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() &&
        entry.path().filename().string().front() != '.')
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) curve.push_back(load_ci_hamiltonian(f.string()));
  if (curve.empty()) throw ConfigError("chem: no geometry files in " + dir);

  const int n_r = o.n_r > 0 ? o.n_r : 3;
  std::vector<EnergyResult> results;
  if (o.t > 0 && o.c > 0) {
    HHLConfig cfg;
    cfg.dim = o.dim;
    cfg.n_r = n_r;
    cfg.t = o.t;
    cfg.c = o.c;
    cfg.c_expansion = o.c_expand ? CExpansion::Truncate : CExpansion::None;
    results = pec_sweep(curve, cfg, !no_h00_shift);
  } else {
    // Per-geometry defaults keep every eigenphase on the clock grid's
    // resolvable window as the spectrum drifts along the curve.
    std::sort(curve.begin(), curve.end(),
              [](const CiHamiltonian& x, const CiHamiltonian& y) {
                return x.r < y.r;
              });
    for (const CiHamiltonian& ci : curve) {
      try {
        const LccSystem sys = build_lcc_system(ci, !no_h00_shift);
        HHLConfig cfg = choose_defaults(sys.a, o.dim, n_r);
        if (o.t > 0) cfg.t = o.t;
        if (o.c > 0) cfg.c = o.c;
        cfg.c_expansion = o.c_expand ? CExpansion::Truncate : CExpansion::None;
        results.push_back(evaluate_geometry(ci, cfg, !no_h00_shift));
      } catch (const Error& e) {
        EnergyResult bad;
        bad.r = ci.r;
        bad.e_hf = ci.e_hf;
        bad.ok = false;
        bad.error = e.what();
        results.push_back(std::move(bad));
      }
    }
  }

  Table table;
  table.columns = {{"r", 2},        {"e_hf", 6},    {"e_cisd", 6},
                   {"e_lccsd", 6},  {"e_corr", 6},  {"e_total", 6},
                   {"overlap", 6},  {"p_success", 6}};
  if (has_shift) table.columns.push_back({"e_total_plot", 6});
  const double nan = std::numeric_limits<double>::quiet_NaN();
  bool any_fail = false;
  for (const EnergyResult& r : results) {
    std::vector<double> row = {r.r,
                               r.e_hf ? *r.e_hf : nan,
                               r.e_cisd ? *r.e_cisd : nan,
                               r.e_lccsd,
                               r.e_corr,
                               r.e_total ? *r.e_total : nan,
                               r.overlap,
                               r.p_success};
    if (has_shift) row.push_back(r.e_total ? *r.e_total + plot_shift : nan);
    if (!r.ok) any_fail = true;
    table.add_row(std::move(row), r.error);
  }
  emit(table, o);
  return any_fail ? 1 : 0;
}

// ------------------------------------------------------------ resource tables
std::vector<int> parse_ns_list(const std::string& text) {
  std::vector<int> out;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    const int lo = std::stoi(text.substr(0, dots));
    std::string rest = text.substr(dots + 2);
    int step = 1, hi;
    if (auto dots2 = rest.find(".."); dots2 != std::string::npos) {
      hi = std::stoi(rest.substr(0, dots2));
      step = std::stoi(rest.substr(dots2 + 2));
    } else {
      hi = std::stoi(rest);
    }
    if (lo < 1 || hi < lo || step < 1)
      throw ConfigError("resources: bad --ns range '" + text + "'");
    for (int v = lo; v <= hi; v += step) out.push_back(v);
  } else {
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  }
  if (out.empty()) throw ConfigError("resources: empty --ns list");
  return out;
}

int run_resources(bool table3, const std::string& p_text,
                  const std::string& ns_text, const std::string& dims_text,
                  const CommonOpts& o) {
  Table table;
  if (table3) {
    table.columns = {{"ns", -1},           {"n4", -1},
                     {"binary_capacity", -1},  {"binary_width", -1},
                     {"ternary_capacity", -1}, {"ternary_width", -1}};
    for (const RegisterTableRow& r : register_table())
      table.add_row({double(r.n_spin_orbitals), double(r.vector_length),
                     double(r.binary_capacity), double(r.binary_width),
                     double(r.ternary_capacity), double(r.ternary_width)});
    emit(table, o);
    return 0;
  }

  std::vector<int> p_list;
  {
    std::stringstream ss(p_text);
    std::string tok;
    while (std::getline(ss, tok, ',')) p_list.push_back(std::stoi(tok));
  }
  for (int p : p_list)
    if (p < 1)
      throw ConfigError("resources: precision digits must be positive, got " +
                        std::to_string(p));
  const std::vector<int> ns_list = parse_ns_list(ns_text);
  const bool with2 = dims_text.find('2') != std::string::npos;
  const bool with3 = dims_text.find('3') != std::string::npos;
  if (!with2 && !with3)
    throw ConfigError("resources: --dims must mention 2 and/or 3");

  table.columns = {{"p", -1}, {"ns", -1}, {"n4", -1}};
  auto add_group = [&](const std::string& prefix) {
    for (const char* name :
         {"state", "clock", "total", "cu_apps", "iqft_two_qudit",
          "rotation_slots"})
      table.columns.push_back({prefix + "_" + name, -1});
  };
  if (with2) add_group("d2");
  if (with3) add_group("d3");
  if (with2 && with3) table.columns.push_back({"total_diff", -1});

  for (int p : p_list)
    for (const ResourceComparison& row : compare_table(ns_list, p)) {
      std::vector<double> vals = {double(p), double(row.n_spin_orbitals),
                                  double(row.vector_length)};
      auto push_est = [&](const ResourceEstimate& e) {
        vals.insert(vals.end(),
                    {double(e.state_register), double(e.clock_register),
                     double(e.total_qudits()), double(e.cu_applications),
                     double(e.iqft_two_qudit), double(e.rotation_slots)});
      };
      if (with2) push_est(row.binary);
      if (with3) push_est(row.ternary);
      if (with2 && with3) vals.push_back(double(row.qudit_difference()));
      table.add_row(std::move(vals));
    }
  emit(table, o);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Qudit statevector simulator and quantum linear-system solver"};
  app.require_subcommand(1);

  CommonOpts toy_opts, solve_opts, chem_opts, res_opts;

  auto* toy = app.add_subcommand("toy", "solve the built-in 3x3 demo systems");
  std::string which;
  toy->add_option("which", which, "diag or nondiag")
      ->required()
      ->check(CLI::IsMember({"diag", "nondiag"}));
  add_common(toy, toy_opts);

  auto* solve = app.add_subcommand("solve", "solve A x = b from files");
  std::string matrix_path, rhs_path;
  solve->add_option("--matrix", matrix_path, "matrix file")->required();
  solve->add_option("--rhs", rhs_path, "right-hand-side vector file")
      ->required();
  add_common(solve, solve_opts);

  auto* chem = app.add_subcommand(
      "chem", "correlation-energy sweep over a directory of CI matrices");
  std::string chem_dir;
  double plot_shift = 0;
  bool no_shift = false;
  chem->add_option("--dir", chem_dir, "directory of geometry files")
      ->required();
  auto* shift_opt = chem->add_option(
      "--plot-shift", plot_shift,
      "extra column e_total_plot = e_total + shift (plot data only)");
  chem->add_flag("--no-h00-shift", no_shift,
                 "do not subtract H[0][0] from the excited block");
  add_common(chem, chem_opts);

  auto* res = app.add_subcommand("resources",
                                 "register and gate-count comparison tables");
  bool table3 = false;
  std::string p_text = "2", ns_text = "2..20..2", dims_text = "2,3";
  res->add_flag("--table3", table3, "orbital-scaling register table preset");
  res->add_option("--p", p_text, "precision decimal digits (comma list)");
  res->add_option("--ns", ns_text, "spin-orbital counts: list or lo..hi[..step]");
  res->add_option("--dims", dims_text, "dimensions to tabulate (2,3)");
  add_common(res, res_opts, /*with_solver_opts=*/false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*toy) return run_toy(which, toy_opts);
    if (*solve) return run_solve(matrix_path, rhs_path, solve_opts);
    if (*chem)
      return run_chem(chem_dir, plot_shift, shift_opt->count() > 0, no_shift,
                      chem_opts);
    if (*res) return run_resources(table3, p_text, ns_text, dims_text, res_opts);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
