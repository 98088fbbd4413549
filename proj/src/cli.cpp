#include "gls/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "gls/error.hpp"
#include "gls/growth.hpp"
#include "gls/report.hpp"
#include "gls/scenario.hpp"
#include "gls/sweep.hpp"
#include "gls/trace.hpp"

namespace gls::cli {

namespace {

struct EvaluateArgs {
  std::string path;
  bool csv = false;
  std::string precision = "rounded";
};

struct SweepArgs {
  std::string path;
  std::string param;
  double from = 0.0;
  double to = 1.0;
  double step = 0.01;
  std::vector<std::string> variants{"full"};
  std::string out_path;
};

struct GrowthArgs {
  double reduction = 0.0;
  double growth = 0.0;
};

struct OracleArgs {
  std::uint64_t steps = 100000;
  std::uint64_t seed = 42;
  double gamma = 0.3;
  double embodied = 444.0;
  std::string load_dist = "uniform";
  double load_low = 0.6;
  double load_high = 1.0;
  double load_p = 0.5;
  std::string ci_dist = "uniform";
  double ci_low = 300.0;
  double ci_high = 500.0;
  double ci_p = 0.5;
  double kg_per_ci = 10.512;
  bool correlated = false;
};

int cmd_evaluate(const EvaluateArgs& args, std::ostream& out) {
  const ScenarioConfig config = load_scenario_file(args.path);
  const EmissionsReport report = config.evaluate();
  if (args.csv) {
    out << evaluation_csv(config, report, args.precision == "full" ? CsvPrecision::full : CsvPrecision::rounded);
  } else {
    out << render_table(make_report_table(config, report));
    for (const auto& w : report.warnings) out << "warning: " << w << "\n";
  }
  return kSuccess;
}

int cmd_sweep(const SweepArgs& args, std::ostream& out) {
  SweepSpec spec;
  spec.base = load_scenario_file(args.path);
  const auto param = parse_sweep_parameter(args.param);
  if (!param) throw InvalidParameter("--param", "expected load_both or load_hi, got '" + args.param + "'");
  spec.parameter = *param;
  spec.from = args.from;
  spec.to = args.to;
  spec.step = args.step;
  spec.variants.clear();
  for (const auto& name : args.variants) {
    const auto v = parse_variant(name);
    if (!v) throw InvalidParameter("--variants", "unknown variant '" + name + "'");
    spec.variants.push_back(*v);
  }

  const std::string csv = sweep_csv(run_sweep(spec));
  if (args.out_path.empty()) {
    out << csv;
    return kSuccess;
  }
  std::ofstream file(args.out_path, std::ios::binary);
  if (!file) throw IoError("cannot open output file '" + args.out_path + "'");
  file << csv;
  file.flush();
  if (!file) throw IoError("cannot write output file '" + args.out_path + "'");
  return kSuccess;
}

int cmd_growth(const GrowthArgs& args, std::ostream& out) {
  out << std::fixed << std::setprecision(2) << years_compensated(args.reduction, args.growth) << "\n";
  return kSuccess;
}

Distribution make_distribution(const char* flag, const std::string& kind, double low, double high, double p) {
  const auto k = parse_distribution_kind(kind);
  if (!k) throw InvalidParameter(flag, "expected uniform or two-point, got '" + kind + "'");
  return *k == Distribution::Kind::uniform ? Distribution::uniform(low, high) : Distribution::two_point(low, high, p);
}

int cmd_oracle(const OracleArgs& args, std::ostream& out) {
  TraceSpec spec;
  spec.steps = args.steps;
  spec.seed = args.seed;
  spec.load = make_distribution("--load-dist", args.load_dist, args.load_low, args.load_high, args.load_p);
  spec.intensity = make_distribution("--ci-dist", args.ci_dist, args.ci_low, args.ci_high, args.ci_p);
  spec.kg_per_unit_intensity = args.kg_per_ci;
  spec.correlated = args.correlated;

  const TraceComparison c = compare_with_means(spec, args.gamma, args.embodied);
  out << std::fixed << std::setprecision(6);
  out << "trace_total " << c.trace_total << "\n";
  out << "closed_form_total " << c.closed_form_total << "\n";
  out << "sample_mean_total " << c.sample_mean_total << "\n";
  out << "sample_covariance " << c.sample_covariance << "\n";
  out << "z_score " << std::setprecision(4) << c.z_score << "\n";
  return c.z_score <= kOracleZThreshold ? kSuccess : kOracleRejected;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Emissions reduction from geographic load shifting between data centres", "gls"};
  app.require_subcommand(1);

  EvaluateArgs eval;
  auto* evaluate = app.add_subcommand("evaluate", "Evaluate a scenario file and print its emissions table");
  evaluate->add_option("file", eval.path, "Scenario file")->required();
  evaluate->add_flag("--csv", eval.csv, "Emit one CSV row instead of the table");
  evaluate->add_option("--precision", eval.precision, "CSV precision: rounded (tonnes) or full (kg)")
      ->check(CLI::IsMember({"rounded", "full"}));

  SweepArgs sw;
  auto* sweep = app.add_subcommand("sweep", "Reduction as a function of load, moving as much work as possible");
  sweep->add_option("file", sw.path, "Base scenario file")->required();
  sweep->add_option("--param", sw.param, "load_both or load_hi")->required();
  sweep->add_option("--from", sw.from, "First load")->required();
  sweep->add_option("--to", sw.to, "Last load")->required();
  sweep->add_option("--step", sw.step, "Load increment")->required();
  sweep->add_option("--variants", sw.variants, "full, zero_idle, zero_embodied, no_time_constraints")
      ->delimiter(',');
  sweep->add_option("--out", sw.out_path, "Write CSV here instead of standard output");

  GrowthArgs gr;
  auto* growth = app.add_subcommand("growth", "Years of compound growth compensated by a reduction");
  growth->add_option("--reduction", gr.reduction, "Relative reduction, [0, 1)")->required();
  growth->add_option("--growth", gr.growth, "Annual growth rate, > 0")->required();

  OracleArgs orc;
  auto* oracle = app.add_subcommand("oracle", "Compare a time-stepped trace with the closed form at the means");
  oracle->add_option("--steps", orc.steps, "Number of time steps")->required();
  oracle->add_option("--seed", orc.seed, "64-bit generator seed")->required();
  oracle->add_option("--gamma", orc.gamma, "Idle fraction")->capture_default_str();
  oracle->add_option("--embodied", orc.embodied, "Embodied kgCO2e/y")->capture_default_str();
  oracle->add_option("--load-dist", orc.load_dist, "uniform or two-point")->capture_default_str();
  oracle->add_option("--load-low", orc.load_low)->capture_default_str();
  oracle->add_option("--load-high", orc.load_high)->capture_default_str();
  oracle->add_option("--load-p", orc.load_p, "Probability of the high value (two-point)")->capture_default_str();
  oracle->add_option("--ci-dist", orc.ci_dist, "uniform or two-point")->capture_default_str();
  oracle->add_option("--ci-low", orc.ci_low, "gCO2e/kWh")->capture_default_str();
  oracle->add_option("--ci-high", orc.ci_high, "gCO2e/kWh")->capture_default_str();
  oracle->add_option("--ci-p", orc.ci_p, "Probability of the high value (two-point)")->capture_default_str();
  oracle->add_option("--kg-per-ci", orc.kg_per_ci, "Full-load kgCO2e/y per gCO2e/kWh")->capture_default_str();
  oracle->add_flag("--correlated", orc.correlated, "Negative control: load tracks carbon intensity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    if (*evaluate) return cmd_evaluate(eval, out);
    if (*sweep) return cmd_sweep(sw, out);
    if (*growth) return cmd_growth(gr, out);
    if (*oracle) return cmd_oracle(orc, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace gls::cli
