#include <doctest.h>

#include <cmath>

#include "gls/error.hpp"
#include "gls/growth.hpp"
#include "gls/sweep.hpp"

using namespace gls;

namespace {

const std::filesystem::path kScenarios = GLS_SCENARIO_DIR;

ScenarioConfig shipped(const char* name) { return load_scenario_file(kScenarios / (std::string(name) + ".scn")); }

const std::vector<Variant> kAllVariants = {Variant::full, Variant::zero_idle, Variant::zero_embodied,
                                           Variant::no_time_constraints};

SweepResult sweep(const ScenarioConfig& base, SweepParameter p = SweepParameter::load_both, double step = 0.01) {
  SweepSpec spec;
  spec.base = base;
  spec.parameter = p;
  spec.step = step;
  spec.variants = kAllVariants;
  return run_sweep(spec);
}

}  // namespace

TEST_SUITE("analysis") {
  TEST_CASE("grid arithmetic") {
    SweepSpec spec;
    spec.base = shipped("ai_solar");
    CHECK(spec.grid().size() == 101);
    CHECK(spec.grid().back() == 1.0);
    spec.from = 0.2;
    spec.to = 0.3;
    spec.step = 0.05;
    CHECK(spec.grid().size() == 3);
    spec.step = 0.04;
    CHECK(spec.grid().size() == 3);  // 0.2, 0.24, 0.28
    spec.from = 0.5;
    CHECK_THROWS_AS(spec.grid(), InvalidParameter);
    spec.from = 0.0;
    spec.step = 0.0;
    CHECK_THROWS_AS(spec.grid(), InvalidParameter);
  }

  TEST_CASE("variant overrides") {
    const ScenarioConfig base = shipped("ai_solar");
    const ScenarioConfig s = sweep_scenario(base, SweepParameter::load_both, 0.4, Variant::no_time_constraints);
    CHECK(s.hi.load == 0.4);
    CHECK(s.lo.load == 0.4);
    CHECK(s.gamma == 0.0);
    CHECK(s.hi.embodied_per_node == 0.0);
    CHECK(s.policy.alpha == 1.0);
    CHECK(s.policy.beta == 1.0);

    const ScenarioConfig h = sweep_scenario(shipped("hpc_s1"), SweepParameter::load_hi, 0.3, Variant::zero_idle);
    CHECK(h.hi.load == 0.3);
    CHECK(h.lo.load == 0.5);
    CHECK(h.gamma == 0.0);
    CHECK(h.hi.embodied_per_node == 444.0);
    CHECK(h.policy.beta == 1.0);
  }

  TEST_CASE("no-time-constraints curve: plateau then decline to zero") {
    const ScenarioConfig base = shipped("ai_solar");
    const SweepResult r = sweep(base);
    REQUIRE(r.rows.size() == 101);
    const std::size_t col = r.column(Variant::no_time_constraints);
    const double plateau = ideal_reduction(base.hi.op_full_per_node, base.lo.op_full_per_node, 0.3);
    for (const auto& row : r.rows) {
      CAPTURE(row.load);
      if (row.load <= 0.5) {
        CHECK(std::abs(row.reductions[col] - plateau) <= 1e-12);
        CHECK(std::abs(row.reductions[col] - r.rows.front().reductions[col]) <= 1e-12);
      } else {
        CHECK(std::abs(row.reductions[col] -
                       ideal_reduction(base.hi.op_full_per_node, base.lo.op_full_per_node, row.load)) <= 1e-12);
      }
    }
    for (std::size_t i = 51; i < r.rows.size(); ++i)
      CHECK(r.rows[i].reductions[col] <= r.rows[i - 1].reductions[col] + 1e-15);
    CHECK(std::abs(r.rows.back().reductions[col]) <= 1e-12);
  }

  TEST_CASE("sweep point with the scenario's alpha matches a direct evaluation") {
    const ScenarioConfig base = shipped("ai_solar");
    const double r = sweep_reduction(base, SweepParameter::load_both, 0.83, Variant::full, false);
    CHECK(r == *base.evaluate().reduction);
    CHECK(std::abs(r * 100.0 - 4.6) <= 0.3);
  }

  TEST_CASE("variant ordering holds at every grid point without shift overhead") {
    for (const char* name : {"ai_solar", "ai_wind", "hpc_s1", "hpc_s3", "hpc_s5"}) {
      ScenarioConfig base = shipped(name);
      base.policy.eta = 0.0;
      for (auto p : {SweepParameter::load_both, SweepParameter::load_hi}) {
        const SweepResult r = sweep(base, p);
        const auto full = r.column(Variant::full), idle = r.column(Variant::zero_idle),
                   emb = r.column(Variant::zero_embodied), ntc = r.column(Variant::no_time_constraints);
        for (const auto& row : r.rows) {
          CAPTURE(name);
          CAPTURE(row.load);
          const auto& x = row.reductions;
          CHECK(x[ntc] >= x[emb] - 1e-12);
          CHECK(x[emb] >= x[full] - 1e-12);
          CHECK(x[ntc] >= x[idle] - 1e-12);
          CHECK(x[idle] >= x[full] - 1e-12);
        }
      }
    }
  }

  TEST_CASE("overhead is charged even when nothing moves") {
    // With eta > 0 and no high-CI load, every variant loses; the smaller
    // baselines of the stripped variants make the loss relatively larger.
    const ScenarioConfig base = shipped("hpc_s3");
    const double full = sweep_reduction(base, SweepParameter::load_hi, 0.0, Variant::full);
    const double ntc = sweep_reduction(base, SweepParameter::load_hi, 0.0, Variant::no_time_constraints);
    CHECK(full < 0.0);
    CHECK(ntc < full);
  }

  TEST_CASE("kink location") {
    const SweepResult ai = sweep(shipped("ai_solar"));
    CHECK(kink_location(ai, Variant::no_time_constraints) == doctest::Approx(0.5));
    CHECK(kink_location(ai, Variant::full) == doctest::Approx(0.5));

    const SweepResult hpc = sweep(shipped("hpc_s1"), SweepParameter::load_hi);
    for (Variant v : {Variant::full, Variant::zero_idle, Variant::zero_embodied})
      CHECK(kink_location(hpc, v) == doctest::Approx(0.5));
    // Without idle or embodied carbon the curve jumps within the first grid
    // step (the low site alone is a tiny baseline); that bend dominates.
    CHECK(kink_location(hpc, Variant::no_time_constraints) == doctest::Approx(0.01));

    SweepResult flat;
    flat.variants = {Variant::full};
    for (int i = 0; i < 5; ++i) flat.rows.push_back({i / 4.0, {0.25}});
    CHECK_FALSE(kink_location(flat, Variant::full).has_value());
    flat.rows.resize(2);
    CHECK_THROWS_AS(kink_location(flat, Variant::full), InvalidParameter);
    CHECK_THROWS_AS(kink_location(ai, static_cast<Variant>(99)), InvalidParameter);
  }

  TEST_CASE("kink follows the free capacity of the low site") {
    ScenarioConfig base = shipped("hpc_s1");
    base.lo = base.lo.with_load(0.3);
    const SweepResult r = sweep(base, SweepParameter::load_hi);
    CHECK(kink_location(r, Variant::full) == doctest::Approx(0.7));
  }

  TEST_CASE("years of growth compensated") {
    CHECK(years_compensated(0.10, 0.27) == doctest::Approx(0.4408).epsilon(1e-3));
    CHECK(years_compensated(0.10, 0.27) < 1.0);
    CHECK(years_compensated(0.0, 0.27) == 0.0);
    CHECK(years_compensated(0.5, 0.22) == doctest::Approx(std::log(2.0) / std::log(1.22)));
    CHECK(std::abs(years_compensated(0.5, 0.22) - 3.49) <= 0.01);
    CHECK_THROWS_AS(years_compensated(1.0, 0.2), InvalidParameter);
    CHECK_THROWS_AS(years_compensated(0.3, 0.0), InvalidParameter);
    CHECK_THROWS_AS(years_compensated(-0.1, 0.2), InvalidParameter);
  }

  TEST_CASE("compensation is monotone and crosses one year where growth outpaces the cut") {
    for (int ri = 1; ri < 99; ++ri) {
      const double r = ri / 100.0;
      for (int gi = 1; gi < 60; ++gi) {
        const double g = gi / 100.0;
        const double t = years_compensated(r, g);
        CHECK(years_compensated(r + 0.005, g) > t);
        CHECK(years_compensated(r, g + 0.005) < t);
        if (std::abs((1 + g) * (1 - r) - 1) > 1e-12) CHECK((t < 1.0) == ((1 + g) * (1 - r) > 1.0));
        CHECK(std::pow(1 + g, t) * (1 - r) == doctest::Approx(1.0).epsilon(1e-12));
      }
    }
  }

  TEST_CASE("capacity projection") {
    CHECK(std::abs(capacity_projection(1100, 0.22, 0).annual_energy_twh - 9636.0) <= 1e-9);
    CHECK(capacity_projection(55, 0.0, 7).power_gw == 55.0);
    const auto p = capacity_projection(1.0, 0.22, 15);
    CHECK(std::abs(p.power_gw - 19.8) <= 0.1);
    CHECK(p.annual_energy_twh == doctest::Approx(p.power_gw * 8.76));
    CHECK_THROWS_AS(capacity_projection(0.0, 0.2, 1), InvalidParameter);
    CHECK_THROWS_AS(capacity_projection(1.0, 0.2, -1), InvalidParameter);
  }
}
