#include <CLI11.hpp>

#include "pba/json_io.hpp"

#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;
using namespace pba;

struct OutputOpts {
  std::string format;  // empty = auto
  std::string output_path;
  double tolerance_override = -1.0;  // negative = unset
};

void attach_common(CLI::App* cmd, OutputOpts& opts) {
  cmd->add_option("--format", opts.format, "Output format (default: table on a terminal, json otherwise)")
      ->check(CLI::IsMember({"table", "json"}));
  cmd->add_option("--output", opts.output_path, "Write the report to this path instead of stdout");
  cmd->add_option("--tolerance-override", opts.tolerance_override,
                  "Replace every relative tolerance factor used by asserted checks")
      ->check(CLI::NonNegativeNumber);
}

// precedence: flag, then PB_ALGEBRA_TOLERANCE, then the built-in factor
double tolerance_or(const OutputOpts& opts, double fallback) {
  if (opts.tolerance_override >= 0.0) return opts.tolerance_override;
  if (const char* env = std::getenv("PB_ALGEBRA_TOLERANCE")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v >= 0.0 && std::isfinite(v)) return v;
    static bool warned = false;
    if (!warned) {
      warned = true;
      std::cerr << "warning: ignoring malformed PB_ALGEBRA_TOLERANCE='" << env << "'\n";
    }
  }
  return fallback;
}

std::string resolved_format(const OutputOpts& opts) {
  if (!opts.format.empty()) return opts.format;
  if (!opts.output_path.empty()) return "json";
  return isatty(fileno(stdout)) ? "table" : "json";
}

void emit(const OutputOpts& opts, const json& j, const std::string& table) {
  const std::string body = resolved_format(opts) == "json" ? dump_canonical(j) : table;
  if (opts.output_path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(opts.output_path);
  if (!out) throw std::invalid_argument("cannot open output path '" + opts.output_path + "'");
  out << body;
}

std::string format_complex(const Complex& z) {
  char buf[64];
  // + 0.0 folds negative zero away for display
  std::snprintf(buf, sizeof(buf), "%+10.6f%+10.6fi", z.real() + 0.0, z.imag() + 0.0);
  return buf;
}

std::string matrix_table(const std::string& name, const CMatrix& m) {
  std::ostringstream out;
  out << name << " =\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out << " ";
    for (Eigen::Index j = 0; j < m.cols(); ++j) out << " " << format_complex(m(i, j));
    out << "\n";
  }
  return out.str();
}

std::string check_line(const std::string& name, double residual, double tolerance, bool ok) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "  %-42s %12.4e %12.4e  %s\n", name.c_str(), residual,
                tolerance, ok ? "ok" : "FAIL");
  return buf;
}

// ===== gen =====

int run_gen(int s, const OutputOpts& opts) {
  const auto pb = build_pb_operators(s);

  json j{{"s", s},
         {"a", matrix_to_json(pb.a)},
         {"adag", matrix_to_json(pb.adag)},
         {"A", matrix_to_json(pb.A)},
         {"number", matrix_to_json(pb.number)}};
  std::ostringstream table;
  table << "operators at cutoff s = " << s << "\n\n"
        << matrix_table("a", pb.a) << "\n"
        << matrix_table("adag", pb.adag) << "\n"
        << matrix_table("A", pb.A) << "\n"
        << matrix_table("number", pb.number);

  if (s >= 1) {
    const auto gen = build_named_generators(s);
    j["M"] = matrix_to_json(gen.M);
    j["Mdag"] = matrix_to_json(gen.Mdag);
    j["K"] = matrix_to_json(gen.K);
    table << "\n" << matrix_table("M", gen.M) << "\n" << matrix_table("Mdag", gen.Mdag) << "\n"
          << matrix_table("K", gen.K);
    if (gen.F) {
      j["F"] = matrix_to_json(*gen.F);
      j["Fdag"] = matrix_to_json(*gen.Fdag);
      table << "\n" << matrix_table("F", *gen.F) << "\n" << matrix_table("Fdag", *gen.Fdag);
    }
  }

  emit(opts, j, table.str());
  return 0;
}

// ===== closure =====

int run_closure(int s, bool force, const OutputOpts& opts) {
  if (s > 30 && !force) {
    std::cerr << "closure at s = " << s << " spans up to " << (s + 1) * (s + 1) - 1
              << " matrices of dimension " << s + 1 << "; rerun with --force if you mean it\n";
    return 2;
  }
  const auto result = lie_closure(hermitian_seeds(build_pb_operators(s)));
  const int n = s + 1;
  const int expected = n * n - 1;

  json j{{"s", s},
         {"dim_space", n},
         {"dim_algebra", result.dim_algebra},
         {"expected_dim", expected},
         {"is_su_n", result.is_su_n},
         {"iterations", result.iterations},
         {"max_reconstruction_residual", result.constants.max_reconstruction_residual}};

  std::ostringstream table;
  auto line = [&table](const std::string& label, const std::string& value) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%-26s%s\n", label.c_str(), value.c_str());
    table << buf;
  };
  char residual[32];
  std::snprintf(residual, sizeof(residual), "%.4e",
                result.constants.max_reconstruction_residual);
  line("cutoff s", std::to_string(s));
  line("space dimension", std::to_string(n));
  line("algebra dimension", std::to_string(result.dim_algebra));
  line("expected n^2 - 1", std::to_string(expected));
  line("su(" + std::to_string(n) + ") span match", result.is_su_n ? "yes" : "no");
  line("sweeps", std::to_string(result.iterations));
  line("max bracket residual", residual);

  emit(opts, j, table.str());
  return result.is_su_n ? 0 : 1;
}

// ===== verify =====

int run_verify(int s, const OutputOpts& opts) {
  const double tol_relations = tolerance_or(opts, 1e-12);
  const double tol_group = tolerance_or(opts, 1e-10);

  const auto pb = build_pb_operators(s);
  const auto gen = build_named_generators(s);

  bool all_ok = true;
  json checks = json::array();
  std::ostringstream table;
  table << "verification at cutoff s = " << s << "\n\n";
  auto add_check = [&](const std::string& name, double residual, double tolerance) {
    const bool ok = residual <= tolerance;
    all_ok = all_ok && ok;
    checks.push_back(
        {{"name", name}, {"residual", residual}, {"tolerance", tolerance}, {"pass", ok}});
    table << check_line(name, residual, tolerance, ok);
  };

  for (const auto& rel : verify_generator_relations(gen, pb)) {
    add_check(rel.name, rel.residual, tol_relations * rel.scale);
  }

  {
    const CMatrix d = commutator(pb.a, pb.adag);
    Complex trace(0.0, 0.0);
    for (int i = 0; i <= s; ++i) trace += d(i, i);
    add_check("tr [a,adag] = 0", std::abs(trace), tol_relations * (1.0 + s));
    add_check("[a,adag] = A", max_abs(d - pb.A), tol_relations * (1.0 + s));
    add_check("adag a = number", max_abs(pb.adag * pb.a - pb.number), tol_relations * (1.0 + s));
  }

  for (int d = 1; d <= std::min(8, s - 1); ++d) {
    const auto w = bosonic_limit_window(s, d);
    const double residual = std::max({max_abs(w.A - CMatrix::Identity(d, d)), max_abs(w.M),
                                      max_abs(w.K), max_abs(w.F)});
    add_check("window d=" + std::to_string(d) + " canonical", residual, tol_relations);
  }

  {
    const auto closure = lie_closure(hermitian_seeds(pb));
    add_check("closure dim = n^2 - 1",
              std::abs(closure.dim_algebra - ((s + 1) * (s + 1) - 1)), 0.0);
    add_check("su(n) span match", closure.is_su_n ? 0.0 : 1.0, 0.0);

    std::mt19937_64 rng(1000 + static_cast<unsigned>(s));
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst_unitarity = 0.0;
    double worst_det = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<double> coeffs(closure.basis.size());
      for (auto& c : coeffs) c = u(rng);
      const auto check = group_element_check(closure.basis, coeffs);
      worst_unitarity = std::max(worst_unitarity, check.unitarity_residual);
      worst_det = std::max(worst_det, check.det_deviation);
    }
    add_check("group elements unitary (20 draws)", worst_unitarity, tol_group);
    add_check("group elements unimodular (20 draws)", worst_det, tol_group);
  }

  json j{{"s", s},
         {"tolerance_relations", tol_relations},
         {"tolerance_group", tol_group},
         {"checks", std::move(checks)},
         {"passed", all_ok}};
  table << "\nRESULT: " << (all_ok ? "PASS" : "FAIL") << "\n";
  emit(opts, j, table.str());
  return all_ok ? 0 : 1;
}

// ===== susy =====

int run_susy(int s, int k, const OutputOpts& opts) {
  const double tol = tolerance_or(opts, 1e-12);
  const auto set = build_susy_set(s, k);

  bool all_ok = true;
  std::ostringstream table;
  table << "superalgebra at s = " << s << ", k = " << k << "\n\nrelations (interior | boundary):\n";

  json relations = json::array();
  for (const auto& rel : verify_susy_algebra(set).relations) {
    const bool ok = rel.interior_residual <= tol * rel.scale;
    all_ok = all_ok && ok;
    relations.push_back({{"relation_name", rel.name},
                         {"interior_residual", rel.interior_residual},
                         {"boundary_residual", rel.boundary_residual},
                         {"scale", rel.scale},
                         {"pass", ok}});
    char buf[160];
    std::snprintf(buf, sizeof(buf), "  %-26s %12.4e | %12.4e  %s\n", rel.name.c_str(),
                  rel.interior_residual, rel.boundary_residual, ok ? "ok" : "FAIL");
    table << buf;
  }

  table << "\ndoublets:\n";
  json doublets = json::array();
  for (int m = 0; m <= s - k; ++m) {
    const auto doublet = doublet_spectrum(set, m);
    const auto quasi = verify_quasialgebra(set, doublet);
    const double eigen_residual =
        max_abs(set.Nprime * doublet.projector - doublet.eigenvalue * doublet.projector);
    const double worst = std::max(
        {quasi.commutator_residual, quasi.anticommutator_residual, quasi.square_residual});
    const bool ok = eigen_residual <= tol * doublet.eigenvalue && worst <= tol * doublet.eigenvalue;
    all_ok = all_ok && ok;
    doublets.push_back({{"m", m},
                        {"eigenvalue", doublet.eigenvalue},
                        {"eigenvalue_residual", eigen_residual},
                        {"quasialgebra_residual", worst},
                        {"pass", ok}});
    char buf[160];
    std::snprintf(buf, sizeof(buf), "  m=%-3d C=%-10.0f eigen %10.4e  quasialgebra %10.4e  %s\n",
                  m, doublet.eigenvalue, eigen_residual, worst, ok ? "ok" : "FAIL");
    table << buf;
  }

  // ladder form vs direct form, a few reproducible draws
  double worst_equiv = 0.0;
  {
    std::mt19937_64 rng(2000 + static_cast<unsigned>(100 * s + k));
    std::uniform_real_distribution<double> u(0.2, 2.0);
    std::uniform_real_distribution<double> v(-1.0, 1.0);
    double fact = 1.0;
    for (int i = 2; i <= k; ++i) fact *= i;
    for (int trial = 0; trial < 5; ++trial) {
      const double omega = u(rng);
      const double omega0 = u(rng);
      const Complex g(v(rng), v(rng));
      const auto direct = build_jc_hamiltonian(omega, omega0, g, k, s);
      const auto ladder =
          build_susy_hamiltonian(omega, k * omega - omega0, g * std::sqrt(fact), set);
      worst_equiv = std::max(worst_equiv, max_abs(direct.H - ladder.H) / direct.H.norm());
    }
    const bool ok = worst_equiv <= tol;
    all_ok = all_ok && ok;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "\nhamiltonian forms agree: %10.4e relative  %s\n",
                  worst_equiv, ok ? "ok" : "FAIL");
    table << buf;
  }

  json j{{"s", s},
         {"k", k},
         {"tolerance", tol},
         {"relations", std::move(relations)},
         {"doublets", std::move(doublets)},
         {"hamiltonian_equivalence", {{"draws", 5}, {"max_relative_residual", worst_equiv}}},
         {"passed", all_ok}};
  table << "RESULT: " << (all_ok ? "PASS" : "FAIL") << "\n";
  emit(opts, j, table.str());
  return all_ok ? 0 : 1;
}

// ===== mass =====

int run_mass(const std::optional<double>& inverse_alpha_flag, const std::string& config_path,
             const OutputOpts& opts) {
  MassModel model;
  auto experimental = default_experimental_ratios();
  std::string alpha_source = "default";
  std::string experimental_source = "default";

  if (!config_path.empty()) {
    const auto config = load_mass_config(config_path);
    if (config.inverse_alpha) {
      model.inverse_alpha = *config.inverse_alpha;
      alpha_source = "config";
    }
    if (!config.experimental_ratios.empty()) {
      experimental = config.experimental_ratios;
      experimental_source = "config";
    }
  }
  if (inverse_alpha_flag) {
    model.inverse_alpha = *inverse_alpha_flag;
    alpha_source = "flag";
  }

  const auto mass_table = build_mass_table(model, experimental);

  json j = mass_table_to_json(mass_table);
  j["sources"] = {{"inverse_alpha", alpha_source}, {"experimental_ratios", experimental_source}};

  std::ostringstream table;
  table << " n  label  predicted        experimental     deviation\n";
  for (const auto& row : mass_table.rows) {
    char buf[160];
    if (row.experimental_ratio) {
      std::snprintf(buf, sizeof(buf), " %d  %-5s %15.6f  %15.6f  %12.6e\n", row.n,
                    row.label.c_str(), row.predicted_ratio, *row.experimental_ratio,
                    *row.relative_deviation);
    } else {
      std::snprintf(buf, sizeof(buf), " %d  %-5s %15.6f  %15s  %12s\n", row.n, row.label.c_str(),
                    row.predicted_ratio, "-", "-");
    }
    table << buf;
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf), "\ninverse alpha: %.9g (%s), experimental ratios: %s\n",
                model.inverse_alpha, alpha_source.c_str(), experimental_source.c_str());
  table << buf;

  emit(opts, j, table.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Truncated-oscillator ladder algebra toolkit"};
  app.require_subcommand(1);

  OutputOpts gen_opts, closure_opts, verify_opts, susy_opts, mass_opts;
  int gen_s = 1, closure_s = 1, verify_s = 1, susy_s = 1, susy_k = 1;
  bool closure_force = false;
  double mass_inverse_alpha = -1.0;
  bool mass_alpha_set = false;
  std::string mass_config;

  auto* gen_cmd = app.add_subcommand("gen", "Emit the ladder operators and named generators");
  gen_cmd->add_option("--s", gen_s, "Cutoff (space dimension minus one)")
      ->required()
      ->check(CLI::Range(0, 10000));
  attach_common(gen_cmd, gen_opts);

  auto* closure_cmd =
      app.add_subcommand("closure", "Close the Hermitian seed set under -i[.,.]");
  closure_cmd->add_option("--s", closure_s, "Cutoff")->required()->check(CLI::Range(1, 10000));
  closure_cmd->add_flag("--force", closure_force, "Run even for s > 30");
  attach_common(closure_cmd, closure_opts);

  auto* verify_cmd =
      app.add_subcommand("verify", "Check commutation relations, windows, and group elements");
  verify_cmd->add_option("--s", verify_s, "Cutoff")->required()->check(CLI::Range(1, 10000));
  attach_common(verify_cmd, verify_opts);

  auto* susy_cmd =
      app.add_subcommand("susy", "Check the k-photon superalgebra and its doublets");
  susy_cmd->add_option("--s", susy_s, "Cutoff")->required()->check(CLI::Range(1, 10000));
  susy_cmd->add_option("--k", susy_k, "Photon number of the supercharge")
      ->required()
      ->check(CLI::Range(1, 10000));
  attach_common(susy_cmd, susy_opts);

  auto* mass_cmd = app.add_subcommand("mass", "Evaluate the charged-lepton mass formula");
  mass_cmd->add_option("--inverse-alpha", mass_inverse_alpha, "Coupling 1/alpha")
      ->check(CLI::PositiveNumber);
  mass_cmd->add_option("--config", mass_config, "JSON file with inverse_alpha and ratios");
  attach_common(mass_cmd, mass_opts);

  try {
    app.parse(argc, argv);
    mass_alpha_set = mass_cmd->count("--inverse-alpha") > 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen_cmd->parsed()) return run_gen(gen_s, gen_opts);
    if (closure_cmd->parsed()) return run_closure(closure_s, closure_force, closure_opts);
    if (verify_cmd->parsed()) return run_verify(verify_s, verify_opts);
    if (susy_cmd->parsed()) return run_susy(susy_s, susy_k, susy_opts);
    if (mass_cmd->parsed()) {
      std::optional<double> flag;
      if (mass_alpha_set) flag = mass_inverse_alpha;
      return run_mass(flag, mass_config, mass_opts);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
