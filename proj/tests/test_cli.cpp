#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pba/json_io.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_raw(const std::string& command) {
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof(buf), pipe)) out.append(buf, got);
  const int status = pclose(pipe);
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.output = std::move(out);
  return r;
}

RunResult run(const std::string& args) {
  return run_raw(std::string("\"") + PBALG_BIN + "\" " + args + " 2>/dev/null");
}

RunResult run_env(const std::string& env, const std::string& args) {
  return run_raw(env + " \"" + PBALG_BIN + "\" " + args + " 2>/dev/null");
}

}  // namespace

TEST_CASE("gen emits the two-level operators as json") {
  const auto r = run("gen --s 1 --format json");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["s"] == 1);
  const pba::CMatrix a = pba::matrix_from_json(j["a"]);
  CHECK(a(0, 1) == pba::Complex(1.0, 0.0));
  CHECK(a(1, 0) == pba::Complex(0.0, 0.0));
  const pba::CMatrix A = pba::matrix_from_json(j["A"]);
  CHECK(A(0, 0) == pba::Complex(1.0, 0.0));
  CHECK(A(1, 1) == pba::Complex(-1.0, 0.0));
  CHECK(j["M"]["data"][1][0] == -1.0);
  CHECK_FALSE(j.contains("F"));
}

TEST_CASE("piped output defaults to json") {
  const auto r = run("gen --s 2");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j.contains("F"));
  CHECK(pba::matrix_from_json(j["F"])(0, 2) == pba::Complex(1.0, 0.0));
}

TEST_CASE("json output is byte-stable under reparse") {
  const auto r = run("gen --s 2 --format json");
  REQUIRE(r.exit_code == 0);
  CHECK(pba::dump_canonical(nlohmann::json::parse(r.output)) == r.output);

  const auto v = run("verify --s 2 --format json");
  REQUIRE(v.exit_code == 0);
  CHECK(pba::dump_canonical(nlohmann::json::parse(v.output)) == v.output);
}

TEST_CASE("degenerate cutoff still generates") {
  const auto r = run("gen --s 0");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["a"]["dim"] == 1);
  CHECK_FALSE(j.contains("M"));
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("gen --s -1").exit_code == 2);
  CHECK(run("gen").exit_code == 2);
  CHECK(run("frobnicate --s 1").exit_code == 2);
  CHECK(run("gen --s 1 --format yaml").exit_code == 2);
  CHECK(run("verify --s 0").exit_code == 2);
  CHECK(run("susy --s 4 --k 5").exit_code == 2);
  CHECK(run("mass --inverse-alpha -3").exit_code == 2);
  CHECK(run("").exit_code == 2);
}

TEST_CASE("help exits cleanly") {
  CHECK(run("--help").exit_code == 0);
  CHECK(run("closure --help").exit_code == 0);
}

TEST_CASE("closure reports the su(n) span") {
  const auto r = run("closure --s 5 --format json");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["dim_algebra"] == 35);
  CHECK(j["expected_dim"] == 35);
  CHECK(j["is_su_n"] == true);
  CHECK(j["max_reconstruction_residual"].get<double>() < 1e-10);

  CHECK(run("closure --s 1").exit_code == 0);
}

TEST_CASE("large cutoffs need an explicit force") {
  CHECK(run("closure --s 31").exit_code == 2);
}

TEST_CASE("verify passes at its stock tolerances and fails at impossible ones") {
  const auto ok = run("verify --s 2 --format json");
  REQUIRE(ok.exit_code == 0);
  const auto j = nlohmann::json::parse(ok.output);
  CHECK(j["passed"] == true);
  REQUIRE(!j["checks"].empty());

  const auto forced = run("verify --s 2 --tolerance-override 1e-30 --format json");
  CHECK(forced.exit_code == 1);
  CHECK(nlohmann::json::parse(forced.output)["passed"] == false);
}

TEST_CASE("tolerance can come from the environment, flags win") {
  CHECK(run_env("PB_ALGEBRA_TOLERANCE=1e-30", "verify --s 2").exit_code == 1);
  CHECK(run_env("PB_ALGEBRA_TOLERANCE=1e-30", "verify --s 2 --tolerance-override 1.0")
            .exit_code == 0);
  CHECK(run_env("PB_ALGEBRA_TOLERANCE=banana", "verify --s 2").exit_code == 0);
}

TEST_CASE("susy reports relations and exact doublets") {
  const auto r = run("susy --s 8 --k 2 --format json");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["passed"] == true);
  CHECK(j["relations"].size() == 12);
  REQUIRE(j["doublets"].size() == 7);
  const std::vector<double> expected = {1, 3, 6, 10, 15, 21, 28};
  for (int m = 0; m <= 6; ++m) {
    CHECK(j["doublets"][m]["eigenvalue"] == expected[static_cast<std::size_t>(m)]);
  }
}

TEST_CASE("mass table at the integer coupling") {
  const auto r = run("mass --inverse-alpha 137 --format json");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  const double f = j["rows"][3]["predicted_ratio"].get<double>();
  CHECK(f > 5021.7);
  CHECK(f < 5022.7);
  CHECK(j["sources"]["inverse_alpha"] == "flag");
}

TEST_CASE("mass defaults and config precedence") {
  const auto r = run("mass --format json");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["inverse_alpha"] == 137.035999);
  CHECK(j["rows"][1]["experimental_ratio"] == 206.7682830);

  {
    std::ofstream out("cli_mass_config.json");
    out << R"({"inverse_alpha": 100.0, "experimental_ratios": {"mu": 207.0}})";
  }
  const auto cfg = run("mass --config cli_mass_config.json --format json");
  REQUIRE(cfg.exit_code == 0);
  const auto jc = nlohmann::json::parse(cfg.output);
  CHECK(jc["inverse_alpha"] == 100.0);
  CHECK(jc["sources"]["inverse_alpha"] == "config");
  CHECK(jc["rows"][1]["experimental_ratio"] == 207.0);
  CHECK_FALSE(jc["rows"][2].contains("experimental_ratio"));

  const auto both = run("mass --config cli_mass_config.json --inverse-alpha 137 --format json");
  REQUIRE(both.exit_code == 0);
  const auto jb = nlohmann::json::parse(both.output);
  CHECK(jb["inverse_alpha"] == 137.0);
  CHECK(jb["sources"]["inverse_alpha"] == "flag");

  CHECK(run("mass --config missing_config.json").exit_code == 2);
  std::remove("cli_mass_config.json");
}

TEST_CASE("table format renders aligned text") {
  const auto r = run("gen --s 1 --format table");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("a =") != std::string::npos);
  CHECK(r.output.find("+1.000000") != std::string::npos);
  CHECK(nlohmann::json::accept(r.output) == false);

  const auto v = run("verify --s 2 --format table");
  REQUIRE(v.exit_code == 0);
  CHECK(v.output.find("RESULT: PASS") != std::string::npos);
}

TEST_CASE("reports can be written to a file") {
  const auto r = run("closure --s 2 --output cli_closure_report.json");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.empty());
  std::ifstream in("cli_closure_report.json");
  REQUIRE(in.good());
  nlohmann::json j;
  in >> j;
  CHECK(j["dim_algebra"] == 8);
  std::remove("cli_closure_report.json");
}
