#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "sparrow/error.hpp"
#include "sparrow/evaluation.hpp"
#include "sparrow/random.hpp"
#include "sparrow/sprayer.hpp"

namespace sparrow {
namespace {

const SprayerConfig kCfg{};

GroundPoint at_r1(double r1) { return {kCfg.mount_point.x, kCfg.mount_point.y + r1}; }

TEST(AimAngles, TiltExamples) {
  EXPECT_EQ(aim_angles(kCfg.mount_point, kCfg).tilt, 90.0);
  EXPECT_NEAR(aim_angles(at_r1(70.0), kCfg).tilt, 135.0, 1e-9);
  // 90 + atan(161/70) in degrees, evaluated independently.
  EXPECT_NEAR(aim_angles(at_r1(161.0), kCfg).tilt, 156.50143432404792, 1e-9);
  EXPECT_NEAR(max_tilt(kCfg), 156.50143432404792, 1e-9);
}

TEST(AimAngles, PanConvention) {
  const GroundPoint c = kCfg.mount_point;
  EXPECT_NEAR(aim_angles({c.x, c.y + 10}, kCfg).pan, 0.0, 1e-12);    // forward
  EXPECT_NEAR(aim_angles({c.x - 10, c.y}, kCfg).pan, 90.0, 1e-12);   // left
  EXPECT_NEAR(aim_angles({c.x + 10, c.y}, kCfg).pan, -90.0, 1e-12);  // right
}

TEST(AimAngles, OutOfReachNamesTarget) {
  try {
    aim_angles(at_r1(161.5), kCfg, 7);
    FAIL();
  } catch (const OutOfReachError& e) {
    EXPECT_EQ(e.target(), 7u);
    EXPECT_NEAR(e.r1(), 161.5, 1e-12);
  }
}

TEST(AimAngles, AimPointReconstructsTarget) {
  Rng rng(6);
  for (int i = 0; i < 200; ++i) {
    const double r = rng.uniform(0.0, 161.0);
    const double a = rng.uniform(-M_PI, M_PI);
    const GroundPoint t{kCfg.mount_point.x + r * std::cos(a), kCfg.mount_point.y + r * std::sin(a)};
    const TurretAngles ang = aim_angles(t, kCfg);
    EXPECT_GE(ang.tilt, 90.0);
    EXPECT_LE(ang.tilt, max_tilt(kCfg) + 1e-12);
    const GroundPoint back = aim_point(ang, kCfg);
    EXPECT_NEAR(back.x, t.x, 1e-6);
    EXPECT_NEAR(back.y, t.y, 1e-6);
  }
}

TEST(SpreadRadius, Knots) {
  EXPECT_EQ(spread_radius(0.0, kCfg), 1.0);
  EXPECT_EQ(spread_radius(30.0, kCfg), 1.0);
  EXPECT_EQ(spread_radius(50.0, kCfg), 1.0);
  EXPECT_EQ(spread_radius(161.0, kCfg), 14.0);
  EXPECT_NEAR(spread_radius(105.5, kCfg), 7.5, 1e-12);
}

TEST(SpreadRadius, DomainErrors) {
  EXPECT_THROW(spread_radius(-0.1, kCfg), DomainError);
  EXPECT_THROW(spread_radius(161.01, kCfg), DomainError);
  EXPECT_THROW(spread_radius(std::nan(""), kCfg), DomainError);
}

TEST(SpreadRadius, MonotoneAndContinuous) {
  double prev = spread_radius(0.0, kCfg);
  for (int i = 1; i <= 16100; ++i) {
    const double v = spread_radius(i * 0.01, kCfg);
    EXPECT_GE(v, prev);
    EXPECT_LE(v - prev, 13.0 / 111.0 * 0.01 + 1e-12);  // bounded by steepest slope
    prev = v;
  }
}

TEST(ExecutePlan, EmptyPlan) {
  const SprayLog log = execute_plan(SprayPlan{}, {}, kCfg);
  EXPECT_TRUE(log.events.empty());
  EXPECT_EQ(log.total_time, 0.0);
}

TEST(ExecutePlan, SingleWeedNearCentre) {
  const std::vector<SprayTarget> t{{{2.0, 27.0}, 1.0, 4}};
  SprayPlan plan;
  plan.order = {0};
  const SprayLog log = execute_plan(plan, t, kCfg);
  ASSERT_EQ(log.events.size(), 1u);
  EXPECT_EQ(log.events[0].target, 4u);
  EXPECT_EQ(log.events[0].dwell, 0.5);
  EXPECT_EQ(log.events[0].r2, 1.0);
  EXPECT_TRUE(log.events[0].covered);
}

TEST(ExecutePlan, TotalTimeIsSumOfSlewsAndDwells) {
  Rng rng(303);
  const auto pts = random_weed_instance(CameraFootprint{}, 3, rng);
  std::vector<SprayTarget> t;
  for (std::size_t i = 0; i < pts.size(); ++i) t.push_back({pts[i], 0.5, i});
  const SprayPlan plan = plan_nearest_neighbor(footprint_center(CameraFootprint{}), pts);
  const SprayLog log = execute_plan(plan, t, kCfg);
  ASSERT_EQ(log.events.size(), 3u);

  double pan = 0.0, tilt = 90.0, sum = 0.0, prev_start = -1.0;
  for (std::size_t k = 0; k < 3; ++k) {
    const auto& e = log.events[k];
    EXPECT_EQ(e.target, plan.order[k]);
    double dp = std::abs(e.angles.pan - pan);
    if (dp > 180.0) dp = 360.0 - dp;
    sum += std::max(dp, std::abs(e.angles.tilt - tilt)) / 90.0;
    EXPECT_NEAR(e.start_time, sum, 1e-12);
    EXPECT_GT(e.start_time, prev_start);
    prev_start = e.start_time;
    sum += e.dwell;
    pan = e.angles.pan;
    tilt = e.angles.tilt;
  }
  EXPECT_NEAR(log.total_time, sum, 1e-12);
}

TEST(ExecutePlan, AdditiveAcrossPlans) {
  // Splitting a target list in two gives logs whose totals add up to their own
  // event sums; each execution starts from the normal pose.
  const std::vector<SprayTarget> t{{{10, 30}, 1, 0}, {{-10, 40}, 1, 1}, {{0, 10}, 1, 2}, {{20, 5}, 1, 3}};
  SprayPlan a;
  a.order = {0, 1, 2, 3};
  const SprayLog full = execute_plan(a, t, kCfg);
  double events_sum = 0.0;
  double prev_end = 0.0;
  for (const auto& e : full.events) {
    events_sum += (e.start_time - prev_end) + e.dwell;
    prev_end = e.start_time + e.dwell;
  }
  EXPECT_NEAR(full.total_time, events_sum, 1e-12);
}

TEST(ExecutePlan, UnreachableTruncatesLog) {
  const std::vector<SprayTarget> t{{{0, 30}, 1, 10}, {{0, 300}, 1, 11}, {{0, 20}, 1, 12}};
  SprayPlan plan;
  plan.order = {0, 1, 2};
  try {
    execute_plan(plan, t, kCfg);
    FAIL();
  } catch (const OutOfReachError& e) {
    EXPECT_EQ(e.target(), 11u);
    ASSERT_EQ(e.partial_log().events.size(), 1u);
    EXPECT_EQ(e.partial_log().events[0].target, 10u);
  }
}

TEST(ExecutePlan, CoverageFlagFollowsSpread) {
  const std::vector<SprayTarget> t{{at_r1(105.5), 7.0, 0}, {at_r1(105.5), 8.0, 1}};
  SprayPlan plan;
  plan.order = {0, 1};
  const SprayLog log = execute_plan(plan, t, kCfg);
  EXPECT_TRUE(log.events[0].covered);
  EXPECT_FALSE(log.events[1].covered);
}

TEST(SprayLogCsv, Format) {
  const std::vector<SprayTarget> t{{at_r1(70.0), 1.0, 3}};
  SprayPlan plan;
  plan.order = {0};
  const std::string csv = spray_log_csv(execute_plan(plan, t, kCfg));
  EXPECT_EQ(csv,
            "idx,pan_deg,tilt_deg,r1_cm,r2_cm,t_start_s,dwell_s,covered\n"
            "3,0.000000,135.000000,70.000000,3.342342,0.500000,0.500000,1\n");
}

}  // namespace
}  // namespace sparrow
