#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "gls/scenario.hpp"

namespace gls {

enum class SweepParameter {
  load_both,  ///< both classes at the same load
  load_hi,    ///< high class only; the low class keeps its scenario load
};

/// Which contributions are removed before evaluating a sweep point.
enum class Variant {
  full,
  zero_idle,            ///< idle draw set to zero
  zero_embodied,        ///< embodied carbon set to zero
  no_time_constraints,  ///< both of the above, and shifting possible all year
};

std::string_view to_string(SweepParameter p);
std::string_view to_string(Variant v);
std::optional<SweepParameter> parse_sweep_parameter(std::string_view text);
std::optional<Variant> parse_variant(std::string_view text);

struct SweepSpec {
  ScenarioConfig base;
  SweepParameter parameter = SweepParameter::load_both;
  double from = 0.0;
  double to = 1.0;
  double step = 0.01;
  std::vector<Variant> variants{Variant::full};
  /// Move as much work as possible (alpha = 1) instead of the scenario's alpha.
  bool move_all_work = true;

  void validate() const;
  /// Grid points `from + i * step` up to and including `to`.
  std::vector<double> grid() const;
};

struct SweepRow {
  double load = 0.0;
  std::vector<double> reductions;  ///< one per requested variant, in order
};

struct SweepResult {
  SweepParameter parameter = SweepParameter::load_both;
  std::vector<Variant> variants;
  std::vector<SweepRow> rows;

  std::size_t column(Variant v) const;
};

/// Scenario as evaluated at one sweep point.
ScenarioConfig sweep_scenario(const ScenarioConfig& base, SweepParameter parameter, double load, Variant variant,
                              bool move_all_work = true);

/// Reduction at one sweep point. Where the baseline vanishes (zero load with
/// no idle draw and no embodied carbon) the limit from the neighbouring loads
/// is returned; NaN if emissions are zero everywhere.
double sweep_reduction(const ScenarioConfig& base, SweepParameter parameter, double load, Variant variant,
                       bool move_all_work = true);

SweepResult run_sweep(const SweepSpec& spec);

/// Load at which the discrete second difference of the variant's curve has
/// the largest magnitude, or nullopt for a curve without curvature.
std::optional<double> kink_location(const SweepResult& result, Variant variant);

}  // namespace gls
