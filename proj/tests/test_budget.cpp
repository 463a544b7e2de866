#include <gtest/gtest.h>

#include <cmath>
#include <cstring>

#include <omp.h>

#include "msnoise/budget.hpp"
#include "test_support.hpp"

using namespace msnoise;
using test::rel_error;

namespace {

FrequencyGrid single(double f) { return {.f_min = f, .f_max = f, .n_points = 1}; }

InterferometerConfig no_sr_1kw() {
  auto cfg = table1_preset();
  cfg.optics.power_at_bs = 1e3;
  return cfg;
}

bool bit_equal(const NoiseSpectrum &a, const NoiseSpectrum &b) {
  if (a.channels().size() != b.channels().size())
    return false;
  for (std::size_t c = 0; c < a.channels().size(); ++c) {
    const auto &x = a.channels()[c].values;
    const auto &y = b.channels()[c].values;
    if (a.channels()[c].name != b.channels()[c].name || x.size() != y.size() ||
        std::memcmp(x.data(), y.data(), x.size() * sizeof(double)) != 0)
      return false;
  }
  return true;
}

} // namespace

TEST(Budget, default_channels_in_order) {
  const auto s = compute_budget(FrequencyGrid{}, table1_preset(), {});
  ASSERT_EQ(s.channels().size(), 6u);
  const char *names[] = {"shot", "rad", "thermal_viscous", "thermal_structural", "total", "sql"};
  for (std::size_t i = 0; i < 6; ++i)
    EXPECT_EQ(s.channels()[i].name, names[i]);
  EXPECT_EQ(s.size(), 1000u);
}

TEST(Budget, table1_floors_at_10khz) {
  const auto s = compute_budget(single(1e4), table1_preset(), {});
  EXPECT_LT(rel_error(s.channel("shot").values[0], 1.38e-18), 0.03);
  EXPECT_LT(rel_error(s.channel("rad").values[0], 2.75e-18), 0.03);
  // 40-digit references including the pole and susceptibility corrections
  EXPECT_LT(rel_error(s.channel("shot").values[0], 1.3954706143811632e-18), 1e-13);
  EXPECT_LT(rel_error(s.channel("rad").values[0], 2.7717460233610383e-18), 1e-13);
}

TEST(Budget, one_kilowatt_without_sr_matches_sr_floors) {
  BudgetOptions off;
  off.sr_enabled = false;
  for (double f : {1e3, 1e4}) {
    const auto on = compute_budget(single(f), table1_preset(), {});
    const auto kw = compute_budget(single(f), no_sr_1kw(), off);
    EXPECT_LT(rel_error(kw.channel("shot").values[0], on.channel("shot").values[0]), 0.01);
    EXPECT_LT(rel_error(kw.channel("rad").values[0], on.channel("rad").values[0]), 0.01);
  }
  // well below f_SR / 10 the equivalence is within the 999 vs 1000 gain difference
  const auto on = compute_budget(single(1e3), table1_preset(), {});
  const auto kw = compute_budget(single(1e3), no_sr_1kw(), off);
  EXPECT_LT(rel_error(kw.channel("shot").values[0], on.channel("shot").values[0]), 0.002);
}

TEST(Budget, sr_equivalent_to_scaled_power) {
  test::SetupGenerator gen(41);
  for (int i = 0; i < 50; ++i) {
    auto cfg = gen.config();
    const auto gains = derive_recycling(cfg.recycling);
    auto scaled = cfg;
    scaled.optics.power_at_bs *= gains.g_sr;
    BudgetOptions off;
    off.sr_enabled = false;
    const double f = gains.f_sr / 100.0;
    const auto a = compute_budget(single(f), cfg, {});
    const auto b = compute_budget(single(f), scaled, off);
    for (const char *ch : {"shot", "rad", "total"})
      EXPECT_LT(rel_error(a.channel(ch).values[0], b.channel(ch).values[0]), 0.01) << ch;
  }
}

TEST(Budget, zero_power) {
  auto cfg = table1_preset();
  cfg.optics.power_at_bs = 0.0;
  EXPECT_THROW(compute_budget(FrequencyGrid{}, cfg, {}), std::domain_error);

  BudgetOptions opts;
  opts.channels = {Channel::rad, Channel::thermal_viscous, Channel::total};
  const auto s = compute_budget(FrequencyGrid{}, cfg, opts);
  const auto ref = compute_budget(FrequencyGrid{}, table1_preset(), {});
  for (std::size_t i = 0; i < s.size(); ++i) {
    EXPECT_EQ(s.channel("rad").values[i], 0.0);
    EXPECT_EQ(s.channel("thermal_viscous").values[i], ref.channel("thermal_viscous").values[i]);
    EXPECT_EQ(s.channel("total").values[i], s.channel("thermal_viscous").values[i]);
  }
  EXPECT_FALSE(s.has_channel("shot"));
}

TEST(Budget, damping_selection) {
  BudgetOptions opts;
  opts.damping = DampingSelection::structural;
  const auto s = compute_budget(FrequencyGrid{}, table1_preset(), opts);
  EXPECT_FALSE(s.has_channel("thermal_viscous"));
  const auto &sh = s.channel("shot").values;
  const auto &rd = s.channel("rad").values;
  const auto &th = s.channel("thermal_structural").values;
  const auto &tot = s.channel("total").values;
  for (std::size_t i = 0; i < s.size(); ++i)
    EXPECT_LE(rel_error(tot[i] * tot[i], sh[i] * sh[i] + rd[i] * rd[i] + th[i] * th[i]), 1e-12);

  opts.damping = DampingSelection::viscous;
  opts.channels = {Channel::thermal_structural};
  EXPECT_THROW(compute_budget(FrequencyGrid{}, table1_preset(), opts), ValidationError);
}

TEST(Budget, total_is_quadrature_sum_and_above_sql) {
  test::SetupGenerator gen(43);
  for (int i = 0; i < 30; ++i) {
    const auto cfg = gen.config();
    const FrequencyGrid grid{.f_min = cfg.membrane.f_mem / 100, .f_max = cfg.membrane.f_mem * 100,
                             .n_points = 200};
    const auto s = compute_budget(grid, cfg, {});
    const auto &sh = s.channel("shot").values, &rd = s.channel("rad").values;
    const auto &tv = s.channel("thermal_viscous").values, &tot = s.channel("total").values;
    const auto &sql = s.channel("sql").values;
    for (std::size_t k = 0; k < s.size(); ++k) {
      ASSERT_LE(rel_error(tot[k] * tot[k], sh[k] * sh[k] + rd[k] * rd[k] + tv[k] * tv[k]), 1e-12);
      ASSERT_GE(tot[k] * (1 + 1e-12), sql[k]);
    }
  }
}

TEST(Budget, sql_touched_at_unit_ratio_power) {
  BudgetOptions quantum;
  quantum.channels = {Channel::shot, Channel::rad, Channel::total, Channel::sql};
  for (double f : {0.0, 1e3, 3e4, 74e3, 2e5}) {
    auto cfg = table1_preset();
    cfg.optics.power_at_bs = solve_power(1.0, f, cfg, true).power_at_bs;
    const auto ctx = BudgetContext(cfg, quantum);
    const auto bin = ctx.evaluate(f);
    EXPECT_LE(rel_error(bin.total, bin.sql), 1e-12) << f;
  }
}

TEST(Budget, parallel_matches_serial_bit_for_bit) {
  const FrequencyGrid grid{.f_min = 1.0, .f_max = 1e7, .n_points = 20000};
  const auto cfg = table1_preset();
  const auto serial = compute_budget_serial(grid, cfg, {});
  const int saved = omp_get_max_threads();
  for (int threads : {1, 2, 3, 8}) {
    omp_set_num_threads(threads);
    EXPECT_TRUE(bit_equal(compute_budget(grid, cfg, {}), serial)) << threads;
  }
  omp_set_num_threads(saved);
  EXPECT_TRUE(bit_equal(compute_budget(grid, cfg, {}), compute_budget(grid, cfg, {})));
}

TEST(Budget, sr_requires_mirror) {
  auto cfg = table1_preset();
  cfg.recycling.r_sr.reset();
  EXPECT_THROW(compute_budget(FrequencyGrid{}, cfg, {}), ValidationError);
  BudgetOptions off;
  off.sr_enabled = false;
  EXPECT_NO_THROW(compute_budget(FrequencyGrid{}, cfg, off));
}

TEST(RatioAt, headline_and_self) {
  const auto cfg = table1_preset();
  EXPECT_NEAR(ratio_at(1e4, Channel::rad, Channel::shot, cfg, {}), 2.0, 0.1);
  EXPECT_DOUBLE_EQ(ratio_at(1e4, Channel::thermal_structural, Channel::thermal_structural, cfg, {}),
                   1.0);
  EXPECT_DOUBLE_EQ(ratio_at(3e3, Channel::total, Channel::total, cfg, {}), 1.0);
}

TEST(RatioAt, rad_over_thermal_at_resonance) {
  // With the signal-recycling pole at f_mem the ratio is ~3.0; without the pole
  // factor it would be 4.23. Both sit in the [2.5, 5] window.
  const double r = ratio_at(75e3, Channel::rad, Channel::thermal_viscous, table1_preset(), {});
  EXPECT_GE(r, 2.5);
  EXPECT_LE(r, 5.0);
  EXPECT_LT(rel_error(r, 3.0030016358284670), 1e-6);
}

TEST(RatioAt, zero_denominator) {
  auto cfg = table1_preset();
  cfg.membrane.temperature = 0.0;
  EXPECT_THROW(ratio_at(1e3, Channel::rad, Channel::thermal_viscous, cfg, {}), std::domain_error);
}

TEST(SolvePower, table1_design_points) {
  const auto cfg = table1_preset();
  const auto sr = solve_power(2.0, 0.0, cfg, true);
  EXPECT_LT(rel_error(sr.power_at_bs, 1.0), 0.02);
  EXPECT_LT(rel_error(sr.effective_power, 1006.5763062806685), 1e-12);
  const auto plain = solve_power(2.0, 0.0, cfg, false);
  EXPECT_LT(rel_error(plain.power_at_bs, 1e3), 0.02);
  EXPECT_FALSE(sr.beyond_sr_pole);
  EXPECT_TRUE(solve_power(2.0, 1e5, cfg, true).beyond_sr_pole);
}

TEST(SolvePower, linear_in_ratio_and_hits_target) {
  test::SetupGenerator gen(47);
  for (int i = 0; i < 100; ++i) {
    auto cfg = gen.config();
    const double k = gen.log_uniform(0.1, 10.0);
    const double f = cfg.membrane.f_mem * gen.log_uniform(1e-3, 10.0);
    const auto a = solve_power(k, f, cfg, true);
    const auto b = solve_power(2 * k, f, cfg, true);
    EXPECT_LT(rel_error(b.power_at_bs, 2 * a.power_at_bs), 1e-14);
    cfg.optics.power_at_bs = a.power_at_bs;
    EXPECT_LT(rel_error(ratio_at(f, Channel::rad, Channel::shot, cfg, {}), k), 1e-12);
  }
}

TEST(SolvePower, errors) {
  auto cfg = table1_preset();
  EXPECT_THROW(solve_power(0.0, 0.0, cfg, true), std::invalid_argument);
  cfg.membrane.reflectance = 0.0;
  EXPECT_THROW(solve_power(2.0, 0.0, cfg, true), std::domain_error);
}

TEST(SolveThermalPower, room_temperature_needs_3kw) {
  const auto cfg = table1_preset();
  const double margin = ratio_at(0.0, Channel::rad, Channel::thermal_viscous, cfg, {});
  const auto reference = solve_thermal_power(1.0, 1e7, margin, 0.0, cfg, true);
  EXPECT_LT(rel_error(reference.power_at_bs, 1.0), 1e-12);
  const auto room = solve_thermal_power(300.0, 1e6, margin, 0.0, cfg, true);
  EXPECT_LT(rel_error(room.power_at_bs, 3e3), 1e-12);
  EXPECT_LT(rel_error(room.thermal_scale, std::sqrt(3000.0)), 1e-14);
  EXPECT_NEAR(room.thermal_scale, 54.8, 0.05);
}

TEST(SolveThermalPower, scaling_laws) {
  const auto cfg = table1_preset();
  const auto a = solve_thermal_power(2.0, 3e6, 1.5, 1e3, cfg, true);
  const auto b = solve_thermal_power(8.0, 12e6, 1.5, 1e3, cfg, true);
  EXPECT_LT(rel_error(a.power_at_bs, b.power_at_bs), 1e-14);
  const auto c = solve_thermal_power(2.0, 3e6, 3.0, 1e3, cfg, true);
  EXPECT_LT(rel_error(c.power_at_bs, 4 * a.power_at_bs), 1e-14);
  EXPECT_EQ(solve_thermal_power(0.0, 1e7, 2.0, 0.0, cfg, true).power_at_bs, 0.0);
  EXPECT_THROW(solve_thermal_power(1.0, 1e7, 2.0, 0.0, cfg, true, DampingModel::structural),
               std::domain_error);
}

TEST(SolveThermalPower, achieves_margin) {
  auto cfg = table1_preset();
  for (auto model : {DampingModel::viscous, DampingModel::structural}) {
    const double f = 2e4;
    const auto s = solve_thermal_power(4.0, 2e6, 2.5, f, cfg, true, model);
    auto solved = cfg;
    solved.optics.power_at_bs = s.power_at_bs;
    solved.membrane.temperature = 4.0;
    solved.membrane.q = 2e6;
    const Channel th =
        model == DampingModel::viscous ? Channel::thermal_viscous : Channel::thermal_structural;
    EXPECT_LT(rel_error(ratio_at(f, Channel::rad, th, solved, {}), 2.5), 1e-12);
  }
}

TEST(Sweep, signal_recycling_reflectance) {
  const double values[] = {0.0, 0.9, 0.998};
  const auto rows = sweep("recycling.r_SR", values, 1e3, table1_preset(), {});
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_NEAR(rows[0].g_sr, 1.0, 1e-12);
  EXPECT_NEAR(rows[1].g_sr, 19.0, 1e-12);
  EXPECT_NEAR(rows[2].g_sr, 999.0, 1e-9);
  EXPECT_EQ(rows[2].value, 0.998);
}

TEST(Sweep, power_scaling_and_edge_cases) {
  const double values[] = {1.0, 4.0};
  const auto rows = sweep("power_at_bs", values, 1e3, table1_preset(), {});
  EXPECT_LT(rel_error(rows[1].rad, 2 * rows[0].rad), 1e-14);
  EXPECT_LT(rel_error(rows[1].shot, 0.5 * rows[0].shot), 1e-14);
  EXPECT_EQ(rows[0].thermal, rows[1].thermal);
  ASSERT_TRUE(rows[0].rad_over_shot.has_value());

  EXPECT_TRUE(sweep("membrane.T", {}, 1e3, table1_preset(), {}).empty());
  const double v[] = {1.0};
  EXPECT_THROW(sweep("membrane.colour", v, 1e3, table1_preset(), {}), ValidationError);
  EXPECT_THROW(sweep("grid.spacing", v, 1e3, table1_preset(), {}), ValidationError);

  const double t0[] = {0.0};
  const auto cold = sweep("membrane.T", t0, 1e3, table1_preset(), {});
  EXPECT_FALSE(cold[0].rad_over_thermal.has_value());
}
