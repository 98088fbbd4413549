#include "gls/scenario.hpp"

#include <algorithm>
#include <cmath>

#include "check.hpp"

namespace gls {

using detail::require_fraction;
using detail::require_non_negative;
using detail::require_positive;

void ScenarioConfig::validate() const {
  if (name.empty()) throw InvalidParameter("name", "must not be empty");
  hi.validate();
  lo.validate();
  require_fraction("gamma", gamma);
  policy.validate();

  const auto check_derived = [](const char* field, const SiteClass& cls, const std::optional<NodePowerModel>& power) {
    if (!power) return;
    const double derived = op_full_per_node(*power);
    if (std::abs(derived - cls.op_full_per_node) > 1e-12 * std::max(1.0, std::abs(derived)))
      throw InvalidParameter(field, "op_full_per_node does not match its node power model");
  };
  check_derived("hi", hi, hi_power);
  check_derived("lo", lo, lo_power);
}

SiteClass make_site_class(int site_count, int nodes_per_site, double load, double embodied_per_node,
                          std::optional<double> direct_op_per_node, const std::optional<NodePowerModel>& power,
                          std::vector<std::string>& notes, std::string_view label) {
  SiteClass cls{site_count, nodes_per_site, load, embodied_per_node, 0.0};
  if (direct_op_per_node) {
    cls.op_full_per_node = *direct_op_per_node;
    if (power) notes.push_back(std::string(label) + ": direct per-node operational value overrides node power model");
  } else if (power) {
    cls.op_full_per_node = op_full_per_node(*power);
    notes.push_back(std::string(label) + ": per-node operational emissions derived from node power model");
  } else {
    throw InvalidParameter(std::string(label), "needs a per-node operational value or a node power model");
  }
  cls.validate();
  return cls;
}

void RegionProfile::validate() const {
  require_non_negative("renewable_ci", renewable_ci);
  require_non_negative("average_ci", average_ci);
  if (renewable_ci > average_ci)
    throw InvalidParameter("renewable_ci", "exceeds the average intensity of region '" + name + "'");
  detail::require_finite("renewable_hours_per_day", renewable_hours_per_day);
  if (renewable_hours_per_day <= 0.0 || renewable_hours_per_day >= 24.0)
    throw InvalidParameter("renewable_hours_per_day", "must be in (0, 24)");
  if (sunshine_hours_per_year) require_non_negative("sunshine_hours_per_year", *sunshine_hours_per_year);
  if (wind_load_factor) require_fraction("wind_load_factor", *wind_load_factor);
}

double fossil_ci_backout(const RegionProfile& profile) {
  profile.validate();
  const double h = profile.renewable_hours_per_day;
  const double fossil = (24.0 * profile.average_ci - h * profile.renewable_ci) / (24.0 - h);
  if (fossil < 0.0) throw InvalidParameter("renewable_ci", "implies a negative fossil intensity");
  return fossil;
}

double average_ci(double renewable_ci, double fossil_ci, double renewable_hours_per_day) {
  return (renewable_hours_per_day * renewable_ci + (24.0 - renewable_hours_per_day) * fossil_ci) / 24.0;
}

double mean_fossil_ci(std::span<const RegionProfile> profiles) {
  if (profiles.empty()) throw InvalidParameter("profiles", "must not be empty");
  double sum = 0.0;
  for (const auto& p : profiles) sum += fossil_ci_backout(p);
  return sum / static_cast<double>(profiles.size());
}

double solar_beta(std::span<const RegionProfile> profiles, int always_low_count, double overlap_factor) {
  if (always_low_count < 0) throw InvalidParameter("always_low_count", "must be >= 0");
  require_fraction("overlap_factor", overlap_factor);
  if (profiles.empty() && always_low_count == 0) throw InvalidParameter("profiles", "must not be empty");

  double available = always_low_count;
  for (const auto& p : profiles) {
    p.validate();
    if (!p.sunshine_hours_per_year)
      throw InvalidParameter("sunshine_hours_per_year", "missing for region '" + p.name + "'");
    const double reference = p.renewable_hours_per_day * 365.0;
    available += std::min(1.0, *p.sunshine_hours_per_year / reference);
  }
  const double availability = available / static_cast<double>(profiles.size() + always_low_count);
  return availability * overlap_factor;
}

double wind_beta(double ideal_load_factor, double actual_load_factor, double correlation_penalty) {
  require_fraction("ideal_load_factor", ideal_load_factor);
  if (ideal_load_factor == 0.0) throw InvalidParameter("ideal_load_factor", "must be > 0");
  require_non_negative("actual_load_factor", actual_load_factor);
  if (actual_load_factor > ideal_load_factor)
    throw InvalidParameter("actual_load_factor", "must not exceed the ideal load factor");
  require_fraction("correlation_penalty", correlation_penalty);
  return actual_load_factor / ideal_load_factor * (1.0 - correlation_penalty);
}

std::int64_t nodes_from_power_budget(double budget_w, const NodePowerModel& model) {
  require_positive("budget_w", budget_w);
  model.validate();
  // Nearest whole node: 300 MW of 4,550 W nodes at PUE 1.16 is 56,839.7 nodes and
  // is sized as 56,840.
  return static_cast<std::int64_t>(std::llround(budget_w / (model.active_power_w * model.pue)));
}

}  // namespace gls
