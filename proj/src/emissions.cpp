#include "gls/emissions.hpp"

#include "check.hpp"

namespace gls {

using detail::require_fraction;
using detail::require_non_negative;
using detail::require_positive;

void NodePowerModel::validate() const {
  require_positive("active_power_w", active_power_w);
  require_fraction("idle_fraction", idle_fraction);
  detail::require_finite("pue", pue);
  if (pue < 1.0) throw InvalidParameter("pue", "must be >= 1, got " + std::to_string(pue));
  require_non_negative("network_overhead", network_overhead);
  require_non_negative("carbon_intensity", carbon_intensity);
}

void SiteClass::validate() const {
  if (site_count < 1) throw InvalidParameter("site_count", "must be >= 1");
  if (nodes_per_site < 1) throw InvalidParameter("nodes_per_site", "must be >= 1");
  require_fraction("load", load);
  require_non_negative("embodied_per_node", embodied_per_node);
  require_non_negative("op_full_per_node", op_full_per_node);
}

SiteClass SiteClass::with_load(double new_load) const {
  SiteClass copy = *this;
  copy.load = new_load;
  copy.validate();
  return copy;
}

void ShiftPolicy::validate() const {
  require_fraction("alpha", alpha);
  require_fraction("beta", beta);
  require_non_negative("eta", eta);
  if (eta >= 1.0) throw InvalidParameter("eta", "must be < 1, got " + std::to_string(eta));
}

double node_annual_energy(const NodePowerModel& model) {
  model.validate();
  return model.active_power_w * kHoursPerYear / 1000.0;
}

double op_full_per_node(const NodePowerModel& model) {
  // carbon intensity is per gram; result is in kg
  return node_annual_energy(model) * (1.0 + model.network_overhead) * model.pue * model.carbon_intensity /
         1000.0;
}

namespace {

// Unchecked: shifted loads may exceed 1 by rounding.
double factor(double load, double gamma) { return load + gamma * (1.0 - load); }

void validate_pair(const SiteClass& hi, const SiteClass& lo, double gamma) {
  hi.validate();
  lo.validate();
  require_fraction("gamma", gamma);
}

}  // namespace

double operational_factor(double load, double idle_fraction) {
  require_fraction("load", load);
  require_fraction("idle_fraction", idle_fraction);
  return factor(load, idle_fraction);
}

double baseline_emissions(const SiteClass& hi, const SiteClass& lo, double gamma) {
  validate_pair(hi, lo, gamma);
  return hi.site_count * hi.embodied_site() + lo.site_count * lo.embodied_site() +
         hi.site_count * factor(hi.load, gamma) * hi.op_full_site() +
         lo.site_count * factor(lo.load, gamma) * lo.op_full_site();
}

double effective_alpha(double alpha, const SiteClass& hi, const SiteClass& lo) {
  hi.validate();
  lo.validate();
  require_non_negative("alpha", alpha);

  const double movable = hi.site_count * hi.load;
  const double free = lo.site_count * (1.0 - lo.load);
  if (alpha * movable <= free) return alpha;  // also covers movable == 0
  if (movable >= free) return free / movable;
  return 1.0;
}

ShiftedLoads shifted_loads(double alpha_eff, const SiteClass& hi, const SiteClass& lo) {
  require_fraction("alpha_eff", alpha_eff);
  const double moved = alpha_eff * hi.load;
  return {hi.load * (1.0 - alpha_eff),
          lo.load + moved * static_cast<double>(hi.site_count) / static_cast<double>(lo.site_count)};
}

double shift_overhead(double eta, double alpha_eff, const SiteClass& hi, const SiteClass& lo) {
  require_non_negative("eta", eta);
  require_fraction("alpha_eff", alpha_eff);
  return eta * alpha_eff * (hi.site_count * hi.op_full_site() + lo.site_count * lo.op_full_site());
}

namespace {

struct GlsTerms {
  double alpha_eff;
  double embodied;
  double op_hi;
  double op_lo;
  double overhead;

  double total() const { return embodied + op_hi + op_lo + overhead; }
};

GlsTerms gls_terms(const SiteClass& hi, const SiteClass& lo, double gamma, const ShiftPolicy& policy) {
  validate_pair(hi, lo, gamma);
  policy.validate();
  GlsTerms t{};
  t.alpha_eff = effective_alpha(policy.alpha, hi, lo);
  const ShiftedLoads loads = shifted_loads(t.alpha_eff, hi, lo);
  t.embodied = hi.site_count * hi.embodied_site() + lo.site_count * lo.embodied_site();
  t.op_hi = hi.site_count * factor(loads.hi, gamma) * hi.op_full_site();
  t.op_lo = lo.site_count * factor(loads.lo, gamma) * lo.op_full_site();
  t.overhead = shift_overhead(policy.eta, t.alpha_eff, hi, lo);
  return t;
}

}  // namespace

double gls_emissions(const SiteClass& hi, const SiteClass& lo, double gamma, const ShiftPolicy& policy) {
  return gls_terms(hi, lo, gamma, policy).total();
}

EmissionsReport blended_emissions(const SiteClass& hi, const SiteClass& lo, double gamma,
                                  const ShiftPolicy& policy) {
  const GlsTerms gls = gls_terms(hi, lo, gamma, policy);

  EmissionsReport r;
  r.embodied_total = gls.embodied;
  r.op_hi = hi.site_count * factor(hi.load, gamma) * hi.op_full_site();
  r.op_lo = lo.site_count * factor(lo.load, gamma) * lo.op_full_site();
  r.overhead = gls.overhead;
  r.baseline_total = baseline_emissions(hi, lo, gamma);
  r.gls_total = gls.total();
  r.alpha_eff = gls.alpha_eff;
  r.beta = policy.beta;
  // beta * gls + (1 - beta) * baseline, written so that beta = 0 or gls == baseline
  // reproduces the baseline bit for bit
  r.blended_total = r.baseline_total + policy.beta * (r.gls_total - r.baseline_total);
  if (r.baseline_total > 0.0) r.reduction = (r.baseline_total - r.blended_total) / r.baseline_total;

  if (hi.load == 0.0) r.warnings.emplace_back("high-emission load is zero; nothing to shift");
  if (!r.reduction) r.warnings.emplace_back("baseline emissions are zero; reduction undefined");
  return r;
}

double ideal_reduction(double c_hi, double c_lo, double load) {
  require_non_negative("c_hi", c_hi);
  require_non_negative("c_lo", c_lo);
  require_fraction("load", load);
  const double sum = c_hi + c_lo;
  if (sum <= 0.0) throw InvalidParameter("c_hi + c_lo", "must be > 0 for the reduction to be defined");
  if (load <= 0.5) return (c_hi - c_lo) / sum;
  return 1.0 - ((2.0 * load - 1.0) * c_hi + c_lo) / (load * sum);
}

}  // namespace gls
