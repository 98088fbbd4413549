#include "gls/growth.hpp"

#include <cmath>

#include "check.hpp"
#include "gls/emissions.hpp"

namespace gls {

double years_compensated(double reduction, double annual_growth) {
  detail::require_finite("reduction", reduction);
  if (reduction < 0.0 || reduction >= 1.0) throw InvalidParameter("reduction", "must be in [0, 1)");
  detail::require_positive("annual_growth", annual_growth);
  return -std::log1p(-reduction) / std::log1p(annual_growth);
}

CapacityProjection capacity_projection(double base_power_gw, double annual_growth, int years) {
  detail::require_positive("base_power_gw", base_power_gw);
  detail::require_non_negative("annual_growth", annual_growth);
  if (years < 0) throw InvalidParameter("years", "must be >= 0");
  const double power = base_power_gw * std::pow(1.0 + annual_growth, years);
  // GW over a year in hours gives GWh; /1000 for TWh
  return {power, power * kHoursPerYear / 1000.0};
}

}  // namespace gls
