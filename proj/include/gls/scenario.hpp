#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gls/emissions.hpp"

namespace gls {

/// A complete, validated parameterisation of the two-class model.
struct ScenarioConfig {
  std::string name;
  SiteClass hi;
  SiteClass lo;
  double gamma = 0.0;
  ShiftPolicy policy;
  /// Present only when the class's op_full_per_node was derived from it.
  std::optional<NodePowerModel> hi_power;
  std::optional<NodePowerModel> lo_power;
  std::vector<std::string> notes;

  void validate() const;
  EmissionsReport evaluate() const { return blended_emissions(hi, lo, gamma, policy); }

  bool operator==(const ScenarioConfig&) const = default;
};

/// Builds a site class from either a direct per-node operational value or a
/// node power model. A direct value wins when both are supplied; the choice
/// is appended to `notes`.
SiteClass make_site_class(int site_count, int nodes_per_site, double load, double embodied_per_node,
                          std::optional<double> direct_op_per_node, const std::optional<NodePowerModel>& power,
                          std::vector<std::string>& notes, std::string_view label);

/// Grid carbon intensity of a region split into a renewable-dominated part of
/// the day and a fossil-dominated remainder.
struct RegionProfile {
  std::string name;
  double average_ci = 0.0;
  double renewable_ci = 0.0;
  double renewable_hours_per_day = 8.0;
  std::optional<double> sunshine_hours_per_year;
  std::optional<double> wind_load_factor;

  void validate() const;
};

/// Intensity during the fossil-dominated hours, inverting
/// avg = (h * renewable + (24 - h) * fossil) / 24.
double fossil_ci_backout(const RegionProfile& profile);

/// Forward direction of the same time-weighted average.
double average_ci(double renewable_ci, double fossil_ci, double renewable_hours_per_day);

double mean_fossil_ci(std::span<const RegionProfile> profiles);

/// Fraction of the year during which work can be moved to solar-powered
/// sites. Regions that are low-carbon around the clock count `always_low_count`
/// times at full availability; `overlap_factor` accounts for time-zone overlap.
double solar_beta(std::span<const RegionProfile> profiles, int always_low_count, double overlap_factor);

double wind_beta(double ideal_load_factor, double actual_load_factor, double correlation_penalty);

/// Node count whose facility draw at full load matches `budget_w`, rounded to
/// the nearest node.
std::int64_t nodes_from_power_budget(double budget_w, const NodePowerModel& model);

// Scenario files: `[section]` headers with `key = value` lines, `#` comments.

ScenarioConfig load_scenario(std::string_view text);
ScenarioConfig load_scenario_file(const std::filesystem::path& path);

/// Serialises to the scenario file format; load_scenario inverts it exactly.
std::string to_scenario_text(const ScenarioConfig& config);

}  // namespace gls
