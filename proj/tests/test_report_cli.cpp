#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gls/cli.hpp"
#include "gls/report.hpp"

using namespace gls;

namespace {

const std::filesystem::path kScenarios = GLS_SCENARIO_DIR;

std::string scenario(const char* name) { return (kScenarios / (std::string(name) + ".scn")).string(); }

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run gls_run(std::vector<std::string> args) {
  args.insert(args.begin(), "gls");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  return parts;
}

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("number formatting") {
    CHECK(format_percent(0.30524) == "30.5");
    CHECK(format_percent(0.0325) == "3.3");
    CHECK(format_percent(0.0) == "0.0");
    CHECK(format_percent(-0.0001) == "0.0");
    CHECK(to_tonnes(534538.0) == 535);
    CHECK(to_tonnes(499.9) == 0);
    CHECK(to_tonnes(500.0) == 1);
    CHECK(group_thousands(2565724) == "2,565,724");
    CHECK(group_thousands(999) == "999");
    CHECK(group_thousands(1000) == "1,000");
    CHECK(group_thousands(-56840) == "-56,840");
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  }

  TEST_CASE("table rows follow the published layout") {
    const ScenarioConfig config = load_scenario_file(scenario("hpc_s3"));
    const ReportTable table = make_report_table(config, config.evaluate());
    std::vector<std::string> labels;
    for (const auto& row : table.rows) labels.push_back(row.first);
    REQUIRE(labels.size() == 17);
    CHECK(labels.front() == "n_n");
    CHECK(labels[12] == "overhead (tCO2e/y)");
    CHECK(labels[14] == "Baseline (tCO2e/y)");
    CHECK(labels.back() == "Emission reduction (%)");
    CHECK(table.rows[12].second == "1");  // beta-weighted overhead
    CHECK(table.rows[14].second == "1,054");
    CHECK(table.rows[15].second == "982");
    CHECK(table.rows.back().second == "6.8%");

    const std::string text = render_table(table);
    CHECK(text.rfind("Scenario: ", 0) == 0);
    CHECK(split(text, '\n').size() == 18);
  }

  TEST_CASE("csv with full precision carries the kg totals") {
    const ScenarioConfig config = load_scenario_file(scenario("hpc_s1"));
    const EmissionsReport report = config.evaluate();
    const auto lines = split(evaluation_csv(config, report, CsvPrecision::full), '\n');
    REQUIRE(lines.size() == 2);
    const auto fields = split(lines[1], ',');
    REQUIRE(fields.size() == 8);
    CHECK(std::stod(fields[4]) == report.baseline_total);
    CHECK(std::stod(fields[6]) == report.blended_total);
  }
}

TEST_SUITE("cli") {
  TEST_CASE("evaluate") {
    const Run table = gls_run({"evaluate", scenario("hpc_s1")});
    CHECK(table.code == cli::kSuccess);
    CHECK(table.out.find("30.5%") != std::string::npos);
    CHECK(table.out.find("1,197") != std::string::npos);

    const Run csv = gls_run({"evaluate", scenario("ai_wind"), "--csv"});
    CHECK(csv.code == cli::kSuccess);
    const auto lines = split(csv.out, '\n');
    REQUIRE(lines.size() == 2);
    CHECK(split(lines[1], ',').back() == "5.3");

    CHECK(gls_run({"evaluate", scenario("hpc_s1"), "--csv", "--precision", "full"}).code == cli::kSuccess);
    CHECK(gls_run({"evaluate", scenario("hpc_s1"), "--precision", "coarse"}).code == cli::kInvalidInput);
  }

  TEST_CASE("output is byte-identical across runs") {
    for (const char* name : {"ai_solar", "hpc_s4"}) {
      const Run a = gls_run({"evaluate", scenario(name)});
      const Run b = gls_run({"evaluate", scenario(name)});
      CHECK(a.out == b.out);
    }
  }

  TEST_CASE("exit codes") {
    const Run missing = gls_run({"evaluate", "/nonexistent/none.scn"});
    CHECK(missing.code == cli::kIoFailure);
    CHECK(missing.err.find("/nonexistent/none.scn") != std::string::npos);

    const auto bad = std::filesystem::temp_directory_path() / "gls_bad_alpha.scn";
    {
      std::ifstream in(scenario("hpc_s1"));
      std::stringstream text;
      text << in.rdbuf();
      std::string s = text.str();
      const auto pos = s.find("alpha = ");
      REQUIRE(pos != std::string::npos);
      s.replace(pos, s.find('\n', pos) - pos, "alpha = 1.5");
      std::ofstream(bad) << s;
    }
    const Run invalid = gls_run({"evaluate", bad.string()});
    CHECK(invalid.code == cli::kInvalidInput);
    CHECK(invalid.err.find("alpha") != std::string::npos);
    std::filesystem::remove(bad);

    CHECK(gls_run({}).code == cli::kInvalidInput);
    CHECK(gls_run({"frobnicate"}).code == cli::kInvalidInput);
    CHECK(gls_run({"--help"}).code == cli::kSuccess);
    CHECK(gls_run({"growth", "--reduction", "x", "--growth", "0.2"}).code == cli::kInvalidInput);
    CHECK(gls_run({"growth", "--reduction", "1", "--growth", "0.2"}).code == cli::kInvalidInput);
  }

  TEST_CASE("growth") {
    const Run r = gls_run({"growth", "--reduction", "0.5", "--growth", "0.22"});
    CHECK(r.code == cli::kSuccess);
    CHECK(r.out == "3.49\n");
    CHECK(gls_run({"growth", "--reduction", "0", "--growth", "0.22"}).out == "0.00\n");
  }

  TEST_CASE("sweep") {
    const Run r = gls_run({"sweep", scenario("ai_solar"), "--param", "load_both", "--from", "0", "--to", "1",
                           "--step", "0.01", "--variants", "full,no_time_constraints"});
    CHECK(r.code == cli::kSuccess);
    const auto lines = split(r.out, '\n');
    REQUIRE(lines.size() == 102);
    CHECK(lines.front() == "load,full,no_time_constraints");
    CHECK(split(lines[51], ',')[0] == "0.5");

    const auto path = std::filesystem::temp_directory_path() / "gls_sweep_test.csv";
    const Run to_file = gls_run({"sweep", scenario("hpc_s1"), "--param", "load_hi", "--from", "0", "--to", "1",
                                 "--step", "0.1", "--out", path.string()});
    CHECK(to_file.code == cli::kSuccess);
    CHECK(to_file.out.empty());
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(split(text.str(), '\n').size() == 12);
    std::filesystem::remove(path);

    CHECK(gls_run({"sweep", scenario("ai_solar"), "--param", "load_lo", "--from", "0", "--to", "1", "--step",
                   "0.1"})
              .code == cli::kInvalidInput);
    CHECK(gls_run({"sweep", scenario("ai_solar"), "--param", "load_both", "--from", "0", "--to", "1", "--step",
                   "0.1", "--variants", "bogus"})
              .code == cli::kInvalidInput);
    CHECK(gls_run({"sweep", scenario("ai_solar"), "--param", "load_both", "--from", "0", "--to", "1", "--step",
                   "0.1", "--out", "/nonexistent/dir/out.csv"})
              .code == cli::kIoFailure);
  }

  TEST_CASE("oracle") {
    const Run ok = gls_run({"oracle", "--steps", "100000", "--seed", "42"});
    CHECK(ok.code == cli::kSuccess);
    CHECK(ok.out.find("trace_total ") == 0);
    CHECK(ok.out.find("z_score ") != std::string::npos);
    CHECK(gls_run({"oracle", "--steps", "100000", "--seed", "42"}).out == ok.out);

    CHECK(gls_run({"oracle", "--steps", "100000", "--seed", "42", "--correlated"}).code == cli::kOracleRejected);
    CHECK(gls_run({"oracle", "--steps", "2000", "--seed", "1", "--load-dist", "two-point", "--load-low", "0.1",
                   "--load-high", "0.9", "--load-p", "0.3"})
              .code != cli::kInvalidInput);
    CHECK(gls_run({"oracle", "--steps", "10", "--seed", "1", "--ci-dist", "normal"}).code == cli::kInvalidInput);
    CHECK(gls_run({"oracle", "--steps", "0", "--seed", "1"}).code == cli::kInvalidInput);
  }
}
