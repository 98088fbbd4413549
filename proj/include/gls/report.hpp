#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gls/scenario.hpp"
#include "gls/sweep.hpp"

namespace gls {

/// Label/value rows laid out like the published scenario tables: parameters,
/// then overhead, embodied, baseline, load-shifting total and reduction.
struct ReportTable {
  std::string title;
  std::vector<std::pair<std::string, std::string>> rows;
};

/// kg to whole tonnes, halves rounded away from zero.
long long to_tonnes(double kg);
/// Fraction to a percentage with one decimal, e.g. 0.30524 -> "30.5".
std::string format_percent(double fraction);
/// Integer with comma thousands separators, e.g. 2565724 -> "2,565,724".
std::string group_thousands(long long value);

ReportTable make_report_table(const ScenarioConfig& config, const EmissionsReport& report);
std::string render_table(const ReportTable& table);

enum class CsvPrecision { rounded, full };

/// Header plus one row. `rounded` gives tonnes and a one-decimal percentage;
/// `full` gives kg and the percentage at full double precision.
std::string evaluation_csv(const ScenarioConfig& config, const EmissionsReport& report,
                           CsvPrecision precision = CsvPrecision::rounded);

/// `load,<variant>...` header followed by one row per grid point.
std::string sweep_csv(const SweepResult& result);

/// Quotes a CSV field if it contains a comma, quote or line break.
std::string csv_field(const std::string& text);

}  // namespace gls
