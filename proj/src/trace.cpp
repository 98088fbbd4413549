#include "gls/trace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "check.hpp"

namespace gls {

double Distribution::mean() const {
  return kind == Kind::uniform ? 0.5 * (low + high) : low + p_high * (high - low);
}

double Distribution::quantile(double u) const {
  if (kind == Kind::uniform) return low + (high - low) * u;
  return u < 1.0 - p_high ? low : high;
}

void Distribution::validate(const char* field) const {
  detail::require_finite(field, low);
  detail::require_finite(field, high);
  if (low > high) throw InvalidParameter(field, "lower bound exceeds upper bound");
  if (kind == Kind::two_point) detail::require_fraction(field, p_high);
}

std::optional<Distribution::Kind> parse_distribution_kind(std::string_view text) {
  if (text == "uniform") return Distribution::Kind::uniform;
  if (text == "two-point" || text == "two_point") return Distribution::Kind::two_point;
  return std::nullopt;
}

void TraceSpec::validate() const {
  if (steps < 1) throw InvalidParameter("steps", "must be >= 1");
  load.validate("load");
  if (load.low < 0.0 || load.high > 1.0) throw InvalidParameter("load", "support must lie within [0, 1]");
  intensity.validate("intensity");
  if (intensity.low < 0.0) throw InvalidParameter("intensity", "must be non-negative");
  detail::require_non_negative("kg_per_unit_intensity", kg_per_unit_intensity);
}

namespace {

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      carry_ += (sum_ - t) + x;
    else
      carry_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

struct Step {
  double load;
  double emissions;  ///< full-load operational, kgCO2e/y
};

class TraceGenerator {
 public:
  explicit TraceGenerator(const TraceSpec& spec) : spec_(spec), engine_(spec.seed) {}

  Step next() {
    const double u_load = variate();
    const double u_ci = variate();
    const double load = spec_.load.quantile(spec_.correlated ? u_ci : u_load);
    return {load, spec_.intensity.quantile(u_ci) * spec_.kg_per_unit_intensity};
  }

 private:
  double variate() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  const TraceSpec& spec_;
  std::mt19937_64 engine_;
};

struct Model {
  double a;  // load-proportional share
  double b;  // idle share
  double c;  // embodied

  double operator()(double load, double emissions) const { return a * load * emissions + b * emissions + c; }
};

Model make_model(const TraceSpec& spec, double gamma, double embodied) {
  spec.validate();
  detail::require_fraction("gamma", gamma);
  detail::require_non_negative("embodied", embodied);
  return {1.0 - gamma, gamma, embodied};
}

}  // namespace

double evaluate_trace(const TraceSpec& spec, double gamma, double embodied) {
  const Model model = make_model(spec, gamma, embodied);
  TraceGenerator gen(spec);
  CompensatedSum total;
  for (std::uint64_t i = 0; i < spec.steps; ++i) {
    const Step s = gen.next();
    total.add(model(s.load, s.emissions));
  }
  // each step covers 1/steps of the year
  return total.value() / static_cast<double>(spec.steps);
}

TraceComparison compare_with_means(const TraceSpec& spec, double gamma, double embodied) {
  const Model model = make_model(spec, gamma, embodied);
  const auto n = static_cast<double>(spec.steps);

  CompensatedSum sum_load, sum_emissions, sum_total;
  {
    TraceGenerator gen(spec);
    for (std::uint64_t i = 0; i < spec.steps; ++i) {
      const Step s = gen.next();
      sum_load.add(s.load);
      sum_emissions.add(s.emissions);
      sum_total.add(model(s.load, s.emissions));
    }
  }
  const double mean_load = sum_load.value() / n;
  const double mean_emissions = sum_emissions.value() / n;
  const double mean_total = sum_total.value() / n;

  // Second pass over the regenerated stream for centred moments.
  CompensatedSum co_moment, sq_dev;
  {
    TraceGenerator gen(spec);
    for (std::uint64_t i = 0; i < spec.steps; ++i) {
      const Step s = gen.next();
      co_moment.add((s.load - mean_load) * (s.emissions - mean_emissions));
      const double dev = model(s.load, s.emissions) - mean_total;
      sq_dev.add(dev * dev);
    }
  }

  TraceComparison out;
  out.trace_total = mean_total;
  out.closed_form_total = model(spec.load.mean(), spec.intensity.mean() * spec.kg_per_unit_intensity);
  out.sample_mean_total = model(mean_load, mean_emissions);
  out.sample_covariance = co_moment.value() / n;

  const double diff = std::abs(out.trace_total - out.closed_form_total);
  const double std_error = spec.steps > 1 ? std::sqrt(sq_dev.value() / (n - 1.0) / n) : 0.0;
  if (diff <= 1e-12 * std::max(1.0, std::abs(out.closed_form_total)))
    out.z_score = 0.0;
  else if (std_error > 0.0)
    out.z_score = diff / std_error;
  else
    out.z_score = std::numeric_limits<double>::infinity();
  return out;
}

}  // namespace gls
