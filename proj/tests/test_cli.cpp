#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

// End-to-end tests of the installed CLI binary: exit codes, report fields,
// CSV shapes, config-file precedence, and reproducibility. The binary path
// comes from the build system.

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "leocov/csv.hpp"
#include "leocov/units.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the CLI with the given argument string, capturing stdout (stderr is
// folded in when merge_stderr is set, otherwise discarded).
RunResult run_cli(const std::string& args, bool merge_stderr = false) {
  const std::string cmd =
      std::string(LEOCOV_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  REQUIRE(status != -1);
  REQUIRE(WIFEXITED(status));
  r.exit_code = WEXITSTATUS(status);
  return r;
}

// "key = value" report lines into a map; unknown lines are skipped.
std::map<std::string, std::string> parse_report(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto pos = line.find(" = ");
    if (pos == std::string::npos) continue;
    kv[line.substr(0, pos)] = line.substr(pos + 3);
  }
  return kv;
}

double report_value(const std::map<std::string, std::string>& kv, const std::string& key) {
  const auto it = kv.find(key);
  REQUIRE_MESSAGE(it != kv.end(), "missing report key: ", key);
  return std::stod(it->second);
}

leocov::CsvTable parse_csv(const std::string& text) {
  std::istringstream in(text);
  return leocov::read_csv(in);
}

std::size_t column_index(const leocov::CsvTable& t, const std::string& name) {
  for (std::size_t i = 0; i < t.header.size(); ++i)
    if (t.header[i] == name) return i;
  FAIL("missing column: ", name);
  return 0;
}

std::string temp_path(const std::string& tag) {
  return std::string("/tmp/leocov_cli_test_") + tag + "_" + std::to_string(getpid());
}

}  // namespace

TEST_CASE("geometry report at defaults") {
  const auto r = run_cli("geometry");
  CHECK(r.exit_code == 0);
  const auto kv = parse_report(r.out);
  CHECK(report_value(kv, "n_act") == 648);
  CHECK(report_value(kv, "max_slant_range_km") == doctest::Approx(1694.567).epsilon(1e-4));
  CHECK(report_value(kv, "visibility_probability") ==
        doctest::Approx(0.0149717).epsilon(1e-4));
  CHECK(report_value(kv, "coverage_latitude_limit_deg") ==
        doctest::Approx(84.0565).epsilon(1e-4));
  CHECK(report_value(kv, "min_global_coverage_altitude_km") ==
        doctest::Approx(873.834).epsilon(1e-4));
}

TEST_CASE("geometry at a 90 degree mask reports the degenerate values and exits 2") {
  const auto r = run_cli("geometry --min-elevation-deg 90", true);
  CHECK(r.exit_code == 2);
  const auto kv = parse_report(r.out);
  CHECK(report_value(kv, "max_slant_range_km") == doctest::Approx(500.0).epsilon(1e-9));
  CHECK(report_value(kv, "visibility_probability") == 0.0);
  CHECK(report_value(kv, "coverage_latitude_limit_deg") == doctest::Approx(70.0));
  CHECK(kv.at("min_global_coverage_altitude_km") == "none");
  CHECK(r.out.find("error:") != std::string::npos);
}

TEST_CASE("geometry exits 2 when the inclination does not clear the mask") {
  const auto r = run_cli("geometry --inclination-deg 8 --min-elevation-deg 10", true);
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("error:") != std::string::npos);
}

TEST_CASE("coverage sweep defaults: nine threshold rows with both analytic columns") {
  const auto r = run_cli("coverage");
  REQUIRE(r.exit_code == 0);
  const auto t = parse_csv(r.out);
  const std::vector<std::string> expected_header = {
      "sweep_variable",          "value",       "coverage_analytic_actualN",
      "coverage_analytic_effectiveN", "coverage_mc", "mc_halfwidth",
      "n_eff_used",              "error"};
  CHECK(t.header == expected_header);
  REQUIRE(t.rows.size() == 9);
  const auto c_val = column_index(t, "value");
  const auto c_act = column_index(t, "coverage_analytic_actualN");
  const auto c_eff = column_index(t, "coverage_analytic_effectiveN");
  const auto c_mc = column_index(t, "coverage_mc");
  const auto c_neff = column_index(t, "n_eff_used");
  const auto c_err = column_index(t, "error");
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& row = t.rows[i];
    CHECK(row[0] == "threshold_db");
    CHECK(std::stod(row[c_val]) == doctest::Approx(-10.0 + 5.0 * i).epsilon(1e-12));
    const double actual = std::stod(row[c_act]);
    const double effective = std::stod(row[c_eff]);
    CHECK(actual >= 0.0);
    CHECK(actual <= 1.0);
    CHECK(effective <= actual + 1e-12);  // 439 effective < 648 actual satellites
    CHECK(std::stod(row[c_neff]) == doctest::Approx(439.005).epsilon(1e-5));
    CHECK(row[c_mc].empty());  // no --simulate
    CHECK(row[c_err].empty());
  }
}

TEST_CASE("coverage sweep with --simulate fills the Monte Carlo columns") {
  const auto r = run_cli("coverage --from 0 --to 20 --points 3 --simulate --trials 4000 --seed 11");
  REQUIRE(r.exit_code == 0);
  const auto t = parse_csv(r.out);
  REQUIRE(t.rows.size() == 3);
  const auto c_eff = column_index(t, "coverage_analytic_effectiveN");
  const auto c_mc = column_index(t, "coverage_mc");
  const auto c_hw = column_index(t, "mc_halfwidth");
  for (const auto& row : t.rows) {
    REQUIRE(!row[c_mc].empty());
    REQUIRE(!row[c_hw].empty());
    const double mc = std::stod(row[c_mc]);
    const double hw = std::stod(row[c_hw]);
    CHECK(hw >= 0.0);
    CHECK(std::abs(mc - std::stod(row[c_eff])) <= std::max(0.02, 5.0 * hw));
  }
}

TEST_CASE("rate sweep defaults: eight transmit-power rows, increasing in power") {
  const auto r = run_cli("rate");
  REQUIRE(r.exit_code == 0);
  const auto t = parse_csv(r.out);
  REQUIRE(t.rows.size() == 8);
  CHECK(t.header[2] == "rate_analytic_actualN");
  const auto c_val = column_index(t, "value");
  const auto c_act = column_index(t, "rate_analytic_actualN");
  const auto c_eff = column_index(t, "rate_analytic_effectiveN");
  CHECK(std::stod(t.rows.front()[c_val]) == doctest::Approx(1.0));
  CHECK(std::stod(t.rows.back()[c_val]) == doctest::Approx(100.0));
  for (std::size_t i = 1; i < t.rows.size(); ++i) {
    CHECK(std::stod(t.rows[i][c_act]) > std::stod(t.rows[i - 1][c_act]));
    CHECK(std::stod(t.rows[i][c_eff]) > std::stod(t.rows[i - 1][c_eff]));
    CHECK(t.rows[i][0] == "tx_power");
  }
}

TEST_CASE("sweep rows past the covered latitude band carry error markers but the run succeeds") {
  const auto r = run_cli("coverage --sweep user_latitude --from 0 --to 80 --points 5");
  REQUIRE(r.exit_code == 0);
  const auto t = parse_csv(r.out);
  REQUIRE(t.rows.size() == 5);
  const auto c_act = column_index(t, "coverage_analytic_actualN");
  const auto c_eff = column_index(t, "coverage_analytic_effectiveN");
  const auto c_neff = column_index(t, "n_eff_used");
  const auto c_err = column_index(t, "error");
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(t.rows[i][c_err].empty());
    CHECK(!t.rows[i][c_eff].empty());
  }
  const auto& last = t.rows.back();  // latitude 80 > inclination 70
  CHECK(!last[c_err].empty());
  CHECK(last[c_eff].empty());
  CHECK(last[c_neff].empty());
  CHECK(!last[c_act].empty());  // the actual-N column stays valid
}

TEST_CASE("CSV written with --out matches stdout and round-trips at 15 digits") {
  const std::string path = temp_path("roundtrip");
  const auto to_stdout = run_cli("coverage --points 5");
  const auto to_file = run_cli("coverage --points 5 --out " + path);
  REQUIRE(to_file.exit_code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream file_text;
  file_text << in.rdbuf();
  CHECK(file_text.str() == to_stdout.out);

  std::istringstream reparse(file_text.str());
  const auto t = leocov::read_csv(reparse);
  for (const auto& row : t.rows) {
    for (std::size_t c = 1; c < 7; ++c) {  // numeric columns
      if (row[c].empty()) continue;
      CHECK(leocov::format_g15(std::stod(row[c])) == row[c]);
    }
  }
  std::remove(path.c_str());
}

TEST_CASE("neff grid hits the known anchors and keeps going past the singularity") {
  const auto r = run_cli("neff");
  REQUIRE(r.exit_code == 0);
  const auto t = parse_csv(r.out);
  CHECK(t.header == std::vector<std::string>{"user_latitude_deg", "n_eff", "n_eff_rounded",
                                             "error"});
  REQUIRE(t.rows.size() == 17);  // 0..80 step 5
  CHECK(std::stod(t.rows[0][1]) == doctest::Approx(439.005).epsilon(1e-5));
  CHECK(t.rows[0][2] == "439");
  CHECK(t.rows[0][3].empty());
  // rows at and past the 70 degree inclination are singular
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const double lat = std::stod(t.rows[i][0]);
    if (lat < 70.0) {
      CHECK(t.rows[i][3].empty());
    } else {
      CHECK(t.rows[i][1].empty());
      CHECK(!t.rows[i][3].empty());
    }
  }
}

TEST_CASE("neff single-point grid matches the polar-orbit ratio") {
  const auto r = run_cli("neff --points 1 --from 61.5 --inclination-deg 90 --n-act 100");
  REQUIRE(r.exit_code == 0);
  const auto t = parse_csv(r.out);
  REQUIRE(t.rows.size() == 1);
  CHECK(std::stod(t.rows[0][1]) == doctest::Approx(133.4).epsilon(1e-3));

  const auto equator = run_cli("neff --points 1 --from 0 --inclination-deg 90 --n-act 100");
  const auto te = parse_csv(equator.out);
  CHECK(std::stod(te.rows[0][1]) == doctest::Approx(200.0 / leocov::pi).epsilon(1e-12));
}

TEST_CASE("degenerate sweep ranges are usage errors") {
  CHECK(run_cli("coverage --points 1").exit_code == 1);
  CHECK(run_cli("coverage --points 0").exit_code == 1);
  CHECK(run_cli("rate --points 1").exit_code == 1);
}

TEST_CASE("bad scenario values exit 2, bad flags exit 1") {
  CHECK(run_cli("coverage --altitude-km -5").exit_code == 2);
  CHECK(run_cli("coverage --alpha 1.0").exit_code == 2);
  CHECK(run_cli("verify --user-lat-deg 80 --trials 100").exit_code == 2);
  CHECK(run_cli("coverage --no-such-flag 1").exit_code == 1);
  CHECK(run_cli("nonsense").exit_code == 1);
  CHECK(run_cli("coverage --n-mode explicit:abc").exit_code == 1);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("simulate prints an estimate report") {
  const auto r = run_cli("simulate --generator uniform --n-act 439 --trials 3000 --seed 5");
  REQUIRE(r.exit_code == 0);
  const auto kv = parse_report(r.out);
  CHECK(kv.at("generator") == "uniform");
  CHECK(report_value(kv, "trials") == 3000);
  const double coverage = report_value(kv, "coverage");
  CHECK(coverage >= 0.0);
  CHECK(coverage <= 1.0);
  CHECK(report_value(kv, "rate_bits_per_hz") > 0.0);
  CHECK(report_value(kv, "visible_fraction") <= 1.0);
}

TEST_CASE("simulate rejects a walker lattice that does not factor the constellation") {
  const auto r = run_cli("simulate --generator walker --planes 6 --sats-per-plane 100", true);
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("error:") != std::string::npos);
  CHECK(run_cli("simulate --generator no-such-generator").exit_code == 1);
}

TEST_CASE("verify fails fast on far too few trials") {
  const auto r = run_cli("verify --trials 100");
  CHECK(r.exit_code == 3);
  CHECK(r.out.find("verify: FAIL") != std::string::npos);
  CHECK(r.out.find("INSUFFICIENT") != std::string::npos);
}

TEST_CASE("verify passes with enough trials and reruns byte-identically") {
  const std::string args = "verify --trials 40000 --workers 4 --seed 1";
  const auto first = run_cli(args);
  CHECK(first.exit_code == 0);
  CHECK(first.out.find("verify: PASS") != std::string::npos);
  CHECK(first.out.find("check uniform_coverage") != std::string::npos);
  CHECK(first.out.find("check uniform_rate") != std::string::npos);
  CHECK(first.out.find("check inclined_coverage_vs_effectiveN") != std::string::npos);

  const auto second = run_cli(args);
  CHECK(second.exit_code == 0);
  CHECK(second.out == first.out);
}

TEST_CASE("--show-config prints the resolved options without running") {
  const auto r = run_cli("coverage --n-act 120 --rician-k 5 --show-config");
  REQUIRE(r.exit_code == 0);
  const auto kv = parse_report(r.out);
  CHECK(kv.at("command") == "coverage");
  CHECK(kv.at("n_act") == "120");
  CHECK(report_value(kv, "rician_k") == 5.0);
  CHECK(kv.at("sweep") == "threshold_db");
  CHECK(r.out.find("sweep_variable") == std::string::npos);  // no CSV emitted
}

TEST_CASE("config file supplies defaults and explicit flags override it") {
  const std::string path = temp_path("config");
  {
    std::ofstream cfg(path);
    cfg << "# shared scenario\n";
    cfg << "n-act = 120\n";
    cfg << "inclination-deg=70\n";
  }
  // file value in effect: N_eff(120, 70deg, 0) ~ 81.3
  const auto from_file = run_cli("neff --points 1 --from 0 --config " + path);
  REQUIRE(from_file.exit_code == 0);
  CHECK(std::stod(parse_csv(from_file.out).rows[0][1]) == doctest::Approx(81.3).epsilon(1e-3));

  // explicit flag wins over the file
  const auto overridden = run_cli("neff --points 1 --from 0 --config " + path + " --n-act 648");
  CHECK(std::stod(parse_csv(overridden.out).rows[0][1]) ==
        doctest::Approx(439.005).epsilon(1e-5));

  // unknown keys are parse errors
  {
    std::ofstream cfg(path);
    cfg << "no-such-option = 3\n";
  }
  CHECK(run_cli("neff --config " + path).exit_code == 1);
  // missing file is a usage error too
  CHECK(run_cli("neff --config /no/such/file.cfg").exit_code == 1);
  std::remove(path.c_str());
}
