#include "gls/sweep.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <utility>

#include "check.hpp"

namespace gls {

namespace {

constexpr std::array<std::pair<Variant, std::string_view>, 4> kVariantNames = {{
    {Variant::full, "full"},
    {Variant::zero_idle, "zero_idle"},
    {Variant::zero_embodied, "zero_embodied"},
    {Variant::no_time_constraints, "no_time_constraints"},
}};

// Below the grid spacing of any practical sweep; affine pieces make the
// ratio at this offset equal to the one-sided limit up to rounding.
constexpr double kLimitOffset = 1e-6;

constexpr double kGridSlack = 1e-9;

constexpr double kFlatCurvature = 1e-12;

}  // namespace

std::string_view to_string(SweepParameter p) { return p == SweepParameter::load_both ? "load_both" : "load_hi"; }

std::string_view to_string(Variant v) {
  for (const auto& [variant, name] : kVariantNames)
    if (variant == v) return name;
  return "unknown";
}

std::optional<SweepParameter> parse_sweep_parameter(std::string_view text) {
  if (text == "load_both") return SweepParameter::load_both;
  if (text == "load_hi") return SweepParameter::load_hi;
  return std::nullopt;
}

std::optional<Variant> parse_variant(std::string_view text) {
  for (const auto& [variant, name] : kVariantNames)
    if (name == text) return variant;
  return std::nullopt;
}

void SweepSpec::validate() const {
  base.validate();
  detail::require_fraction("from", from);
  detail::require_fraction("to", to);
  if (from > to) throw InvalidParameter("from", "must not exceed 'to'");
  detail::require_positive("step", step);
  if (variants.empty()) throw InvalidParameter("variants", "at least one variant is required");
}

std::vector<double> SweepSpec::grid() const {
  validate();
  const auto count = static_cast<std::size_t>(std::floor((to - from) / step + kGridSlack)) + 1;
  std::vector<double> points;
  points.reserve(count);
  for (std::size_t i = 0; i < count; ++i) points.push_back(std::min(to, from + static_cast<double>(i) * step));
  return points;
}

std::size_t SweepResult::column(Variant v) const {
  for (std::size_t i = 0; i < variants.size(); ++i)
    if (variants[i] == v) return i;
  throw InvalidParameter("variant", std::string(to_string(v)) + " was not part of the sweep");
}

ScenarioConfig sweep_scenario(const ScenarioConfig& base, SweepParameter parameter, double load, Variant variant,
                              bool move_all_work) {
  ScenarioConfig s = base;
  s.hi = s.hi.with_load(load);
  if (parameter == SweepParameter::load_both) s.lo = s.lo.with_load(load);
  if (move_all_work) s.policy.alpha = 1.0;

  const bool drop_idle = variant == Variant::zero_idle || variant == Variant::no_time_constraints;
  const bool drop_embodied = variant == Variant::zero_embodied || variant == Variant::no_time_constraints;
  if (drop_idle) s.gamma = 0.0;
  if (drop_embodied) {
    s.hi.embodied_per_node = 0.0;
    s.lo.embodied_per_node = 0.0;
  }
  if (variant == Variant::no_time_constraints) s.policy.beta = 1.0;
  return s;
}

double sweep_reduction(const ScenarioConfig& base, SweepParameter parameter, double load, Variant variant,
                       bool move_all_work) {
  const auto at = [&](double l) { return sweep_scenario(base, parameter, l, variant, move_all_work).evaluate().reduction; };
  if (auto r = at(load)) return *r;
  const double nearby = load + kLimitOffset <= 1.0 ? load + kLimitOffset : load - kLimitOffset;
  return at(nearby).value_or(std::numeric_limits<double>::quiet_NaN());
}

SweepResult run_sweep(const SweepSpec& spec) {
  SweepResult result;
  result.parameter = spec.parameter;
  result.variants = spec.variants;
  for (double load : spec.grid()) {
    SweepRow row{load, {}};
    row.reductions.reserve(spec.variants.size());
    for (Variant v : spec.variants)
      row.reductions.push_back(sweep_reduction(spec.base, spec.parameter, load, v, spec.move_all_work));
    result.rows.push_back(std::move(row));
  }
  return result;
}

std::optional<double> kink_location(const SweepResult& result, Variant variant) {
  if (result.rows.size() < 3) throw InvalidParameter("rows", "kink detection needs at least 3 sweep points");
  const std::size_t col = result.column(variant);

  std::optional<double> where;
  double strongest = kFlatCurvature;
  for (std::size_t i = 1; i + 1 < result.rows.size(); ++i) {
    const double d2 = result.rows[i - 1].reductions[col] - 2.0 * result.rows[i].reductions[col] +
                      result.rows[i + 1].reductions[col];
    if (std::isfinite(d2) && std::abs(d2) > strongest) {
      strongest = std::abs(d2);
      where = result.rows[i].load;
    }
  }
  return where;
}

}  // namespace gls
