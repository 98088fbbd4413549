#pragma once

namespace gls {

/// Years of compound growth at `annual_growth` that undo a one-off relative
/// emissions reduction `reduction`: the t with (1 + g)^t * (1 - r) = 1.
double years_compensated(double reduction, double annual_growth);

struct CapacityProjection {
  double power_gw = 0.0;
  double annual_energy_twh = 0.0;  ///< at continuous full draw
};

CapacityProjection capacity_projection(double base_power_gw, double annual_growth, int years);

}  // namespace gls
