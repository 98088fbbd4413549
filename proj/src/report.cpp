#include "gls/report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace gls {

namespace {

std::string shortest(double v) {
  if (std::isnan(v)) return "nan";
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return ec == std::errc{} ? std::string(buf.data(), ptr) : std::string("nan");
}

std::string fixed(double v, int decimals) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(decimals) << v;
  return out.str();
}

std::string general(double v, int digits) {
  if (std::isnan(v)) return "nan";
  std::ostringstream out;
  out << std::setprecision(digits) << v;
  return out.str();
}

std::string count_label(int hi, int lo) {
  return hi == lo ? group_thousands(hi) : group_thousands(hi) + " / " + group_thousands(lo);
}

}  // namespace

long long to_tonnes(double kg) { return std::llround(kg / 1000.0); }

std::string format_percent(double fraction) {
  // std::round is half away from zero
  const double tenths = std::round(fraction * 1000.0);
  return fixed(tenths / 10.0 + 0.0, 1);
}

std::string group_thousands(long long value) {
  std::string digits = std::to_string(value < 0 ? -value : value);
  std::string out;
  const std::size_t lead = digits.size() % 3 == 0 ? 3 : digits.size() % 3;
  out.append(digits, 0, lead);
  for (std::size_t i = lead; i < digits.size(); i += 3) {
    out.push_back(',');
    out.append(digits, i, 3);
  }
  return value < 0 ? "-" + out : out;
}

ReportTable make_report_table(const ScenarioConfig& config, const EmissionsReport& report) {
  const auto kg = [](double v) { return group_thousands(std::llround(v)); };
  const auto t = [](double v) { return group_thousands(to_tonnes(v)); };

  ReportTable table;
  table.title = config.name;
  auto& rows = table.rows;
  rows.emplace_back("n_n", count_label(config.hi.nodes_per_site, config.lo.nodes_per_site));
  rows.emplace_back("n_hi", group_thousands(config.hi.site_count));
  rows.emplace_back("n_lo", group_thousands(config.lo.site_count));
  rows.emplace_back("Embodied carbon c_em (kgCO2e/y)",
                    config.hi.embodied_per_node == config.lo.embodied_per_node
                        ? kg(config.hi.embodied_per_node)
                        : kg(config.hi.embodied_per_node) + " / " + kg(config.lo.embodied_per_node));
  rows.emplace_back("Operational emissions, high-CI c_hi (kgCO2e/y)", kg(config.hi.op_full_per_node));
  rows.emplace_back("Operational emissions, low-CI c_lo (kgCO2e/y)", kg(config.lo.op_full_per_node));
  rows.emplace_back("lambda_hi", fixed(config.hi.load, 2));
  rows.emplace_back("lambda_lo", fixed(config.lo.load, 2));
  rows.emplace_back("gamma", fixed(config.gamma, 2));
  rows.emplace_back("alpha", fixed(config.policy.alpha, 2));
  rows.emplace_back("beta", fixed(config.policy.beta, 2));
  rows.emplace_back("eta", fixed(config.policy.eta, 2));
  rows.emplace_back("overhead (tCO2e/y)", t(report.overhead_year_average()));
  rows.emplace_back("Embodied (tCO2e/y)", t(report.embodied_total));
  rows.emplace_back("Baseline (tCO2e/y)", t(report.baseline_total));
  rows.emplace_back("Geographic load shifting (tCO2e/y)", t(report.blended_total));
  rows.emplace_back("Emission reduction (%)", report.reduction ? format_percent(*report.reduction) + "%" : "n/a");
  return table;
}

std::string render_table(const ReportTable& table) {
  std::size_t label_width = 0, value_width = 0;
  for (const auto& [label, value] : table.rows) {
    label_width = std::max(label_width, label.size());
    value_width = std::max(value_width, value.size());
  }
  std::ostringstream out;
  out << "Scenario: " << table.title << "\n";
  for (const auto& [label, value] : table.rows)
    out << std::left << std::setw(static_cast<int>(label_width)) << label << "  " << std::right
        << std::setw(static_cast<int>(value_width)) << value << "\n";
  return out.str();
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted.push_back('"');
    quoted.push_back(c);
  }
  quoted.push_back('"');
  return quoted;
}

std::string evaluation_csv(const ScenarioConfig& config, const EmissionsReport& report, CsvPrecision precision) {
  std::ostringstream out;
  const double overhead = report.overhead_year_average();
  if (precision == CsvPrecision::rounded) {
    out << "name,alpha_eff,overhead_t,embodied_t,baseline_t,gls_t,blended_t,reduction_pct\n";
    out << csv_field(config.name) << ',' << shortest(report.alpha_eff) << ',' << to_tonnes(overhead) << ','
        << to_tonnes(report.embodied_total) << ',' << to_tonnes(report.baseline_total) << ','
        << to_tonnes(report.gls_total) << ',' << to_tonnes(report.blended_total) << ','
        << (report.reduction ? format_percent(*report.reduction) : "nan") << '\n';
  } else {
    out << "name,alpha_eff,overhead_kg,embodied_kg,baseline_kg,gls_kg,blended_kg,reduction_pct\n";
    out << csv_field(config.name) << ',' << shortest(report.alpha_eff) << ',' << shortest(overhead) << ','
        << shortest(report.embodied_total) << ',' << shortest(report.baseline_total) << ','
        << shortest(report.gls_total) << ',' << shortest(report.blended_total) << ','
        << (report.reduction ? shortest(*report.reduction * 100.0) : "nan") << '\n';
  }
  return out.str();
}

std::string sweep_csv(const SweepResult& result) {
  std::ostringstream out;
  out << "load";
  for (Variant v : result.variants) out << ',' << to_string(v);
  out << '\n';
  for (const auto& row : result.rows) {
    out << general(row.load, 10);
    for (double r : row.reductions) out << ',' << general(r, 12);
    out << '\n';
  }
  return out.str();
}

}  // namespace gls
