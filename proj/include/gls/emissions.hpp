#pragma once

// Annual-average emissions model for a pair of data-centre classes (high and
// low carbon intensity) with and without geographic load shifting.
//
// Units: power in W, energy in kWh, carbon intensity in gCO2e/kWh, emissions
// in kgCO2e per year. Loads and fractions are dimensionless.

#include <optional>
#include <string>
#include <vector>

namespace gls {

inline constexpr double kHoursPerYear = 24.0 * 365.0;

/// Electrical and grid characteristics of one node.
struct NodePowerModel {
  double active_power_w = 0.0;
  double idle_fraction = 0.0;
  double pue = 1.0;
  /// Extra network-infrastructure draw as a fraction of node draw.
  double network_overhead = 0.0;
  double carbon_intensity = 0.0;

  void validate() const;
  bool operator==(const NodePowerModel&) const = default;
};

/// One emission class: `site_count` identical sites of `nodes_per_site` nodes.
struct SiteClass {
  int site_count = 1;
  int nodes_per_site = 1;
  double load = 0.0;
  /// kgCO2e/y per node, amortised.
  double embodied_per_node = 0.0;
  /// kgCO2e/y per node if it were active all year, PUE included.
  double op_full_per_node = 0.0;

  void validate() const;

  /// Site totals (per-node value times nodes per site).
  double embodied_site() const { return embodied_per_node * nodes_per_site; }
  double op_full_site() const { return op_full_per_node * nodes_per_site; }

  SiteClass with_load(double new_load) const;

  bool operator==(const SiteClass&) const = default;
};

struct ShiftPolicy {
  double alpha = 0.0;  ///< fraction of the high-side workload that may move
  double beta = 0.0;   ///< fraction of the year during which it may move
  double eta = 0.0;    ///< emissions overhead per unit of moved work

  void validate() const;
  bool operator==(const ShiftPolicy&) const = default;
};

struct ShiftedLoads {
  double hi = 0.0;
  double lo = 0.0;
};

/// Itemised annual emissions in kgCO2e/y.
struct EmissionsReport {
  double embodied_total = 0.0;
  double op_hi = 0.0;  ///< baseline operational emissions of the high class
  double op_lo = 0.0;
  double overhead = 0.0;  ///< shifting overhead while shifting is active
  double baseline_total = 0.0;
  double gls_total = 0.0;
  double blended_total = 0.0;
  double alpha_eff = 0.0;
  double beta = 0.0;
  /// Empty when the baseline is zero and the ratio is undefined.
  std::optional<double> reduction;
  std::vector<std::string> warnings;

  /// Overhead averaged over the year, i.e. weighted by the shifting time fraction.
  double overhead_year_average() const { return beta * overhead; }
};

double node_annual_energy(const NodePowerModel& model);
double op_full_per_node(const NodePowerModel& model);

/// Fraction of full-load power drawn at `load` when idle draws `idle_fraction`.
double operational_factor(double load, double idle_fraction);

double baseline_emissions(const SiteClass& hi, const SiteClass& lo, double gamma);

/// Caps `alpha` so that the moved work fits in the free capacity of the low
/// class. The piecewise form with an "otherwise 1" branch reduces to
/// min(alpha, free / movable) clamped to [0, 1]; the third branch can only be
/// reached for alpha > 1.
double effective_alpha(double alpha, const SiteClass& hi, const SiteClass& lo);

ShiftedLoads shifted_loads(double alpha_eff, const SiteClass& hi, const SiteClass& lo);

double shift_overhead(double eta, double alpha_eff, const SiteClass& hi, const SiteClass& lo);

double gls_emissions(const SiteClass& hi, const SiteClass& lo, double gamma, const ShiftPolicy& policy);

EmissionsReport blended_emissions(const SiteClass& hi, const SiteClass& lo, double gamma,
                                  const ShiftPolicy& policy);

/// Upper bound on the reduction for equal loads with no embodied carbon, no
/// idle draw, no overhead and unrestricted shifting.
double ideal_reduction(double c_hi, double c_lo, double load);

}  // namespace gls
