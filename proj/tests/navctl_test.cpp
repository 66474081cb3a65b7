#include <gtest/gtest.h>

#include <cmath>

#include "sparrow/error.hpp"
#include "sparrow/navctl.hpp"
#include "sparrow/random.hpp"
#include "sparrow/render.hpp"

namespace sparrow {
namespace {

Scenario row_scenario(double heading, double lateral = 0.0) {
  Scenario s = default_row_scenario();
  s.mission.start_heading = heading;
  s.mission.start_lateral = lateral;
  return s;
}

TEST(ControlStep, Examples) {
  EXPECT_EQ(control_step(0.0, 0.8).omega, 0.0);
  EXPECT_EQ(control_step(10.0, 0.5).omega, 5.0);
  EXPECT_EQ(control_step(10.0, 0.5, 33.0).v, 33.0);
}

TEST(ControlStep, LinearAndOdd) {
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    const double a = rng.uniform(-45, 45), b = rng.uniform(-45, 45), k = rng.uniform(-3, 3);
    const double alpha = rng.uniform(0.1, 2.0);
    EXPECT_EQ(control_step(-a, alpha).omega, -control_step(a, alpha).omega);
    EXPECT_NEAR(control_step(a + b, alpha).omega,
                control_step(a, alpha).omega + control_step(b, alpha).omega, 1e-13);
    EXPECT_NEAR(control_step(k * a, alpha).omega, k * control_step(a, alpha).omega, 1e-13);
  }
}

TEST(IntegratePose, StraightLine) {
  const RobotPose p = integrate_pose({0, 0, 0}, {10, 0}, 1.0);
  EXPECT_DOUBLE_EQ(p.x, 10.0);
  EXPECT_EQ(p.y, 0.0);
  EXPECT_EQ(p.heading, 0.0);
}

TEST(IntegratePose, RotationInPlace) {
  const RobotPose p = integrate_pose({3, 4, 10}, {0, 5}, 2.0);
  EXPECT_EQ(p.x, 3.0);
  EXPECT_EQ(p.y, 4.0);
  EXPECT_DOUBLE_EQ(p.heading, 20.0);
}

TEST(IntegratePose, PositiveHeadingMovesRight) {
  const RobotPose p = integrate_pose({0, 0, 30}, {10, 0}, 1.0);
  EXPECT_NEAR(p.x, 10 * std::cos(M_PI / 6), 1e-12);
  EXPECT_NEAR(p.y, 5.0, 1e-12);
}

TEST(IntegratePose, FullRotationCloses) {
  RobotPose p{0, 0, 17.0};
  for (int i = 0; i < 360; ++i) p = integrate_pose(p, {0, 1}, 1.0);
  EXPECT_NEAR(p.heading, 17.0, 1e-9);
}

TEST(IntegratePose, RequiresPositiveDt) {
  EXPECT_THROW(integrate_pose({}, {}, 0.0), DomainError);
  EXPECT_THROW(integrate_pose({}, {}, -0.1), DomainError);
}

TEST(NormalizeDegrees, Range) {
  EXPECT_EQ(normalize_degrees(180.0), 180.0);
  EXPECT_EQ(normalize_degrees(-180.0), 180.0);
  EXPECT_EQ(normalize_degrees(190.0), -170.0);
  EXPECT_EQ(normalize_degrees(725.0), 5.0);
}

TEST(RowFollowing, AlignedStartStaysAtZero) {
  const RowFollowResult r = run_row_following(row_scenario(0.0), 50, PerceptionSource::Analytic);
  ASSERT_EQ(r.samples.size(), 50u);
  for (const auto& s : r.samples) {
    EXPECT_EQ(s.delta_theta, 0.0);
    EXPECT_EQ(s.pose.y, 0.0);
  }
  EXPECT_DOUBLE_EQ(r.final_pose.x, 50 * 20.0 * 0.1);
}

TEST(RowFollowing, TenDegreeErrorDecaysGeometrically) {
  // Heading error is multiplied by (1 - alpha dt) = 0.92 each step, so it
  // first drops under 0.5 deg at step 36 (10 * 0.92^36 = 0.4956).
  const RowFollowResult r = run_row_following(row_scenario(10.0), 100, PerceptionSource::Analytic);
  int first_below = -1;
  for (std::size_t k = 0; k < r.samples.size(); ++k) {
    const double err = std::abs(r.samples[k].pose.heading);
    EXPECT_NEAR(err, 10.0 * std::pow(0.92, static_cast<double>(k)), 1e-9);
    if (k > 0) EXPECT_LT(err, std::abs(r.samples[k - 1].pose.heading));
    if (first_below < 0 && err < 0.5) first_below = static_cast<int>(k);
  }
  EXPECT_EQ(first_below, 36);
}

TEST(RowFollowing, DoublingAlphaKeepsSignSequence) {
  for (double h : {10.0, -7.0, 25.0}) {
    Scenario a = row_scenario(h);
    Scenario b = a;
    b.controller.alpha = 2 * a.controller.alpha;
    const auto ra = run_row_following(a, 80, PerceptionSource::Analytic);
    const auto rb = run_row_following(b, 80, PerceptionSource::Analytic);
    for (std::size_t k = 0; k < ra.samples.size(); ++k) {
      EXPECT_EQ(std::signbit(ra.samples[k].delta_theta), std::signbit(rb.samples[k].delta_theta));
    }
  }
}

TEST(RowFollowing, SignConventionMatchesPerception) {
  // Heading right of the row: the row leans left in the image, so the error
  // is negative and the command turns back left.
  const RobotPose pose{0, 0, 8.0};
  EXPECT_EQ(analytic_delta_theta(pose), -8.0);
  const RenderParams view = front_view(pose, RenderParams{});
  const PipelineResult r = run_pipeline(render_field(default_row_scenario(), view).image);
  EXPECT_LT(r.row.delta_theta, 0.0);
  EXPECT_NEAR(r.row.delta_theta, -8.0, 2.0);
}

TEST(RowFollowing, PipelineSourceConverges) {
  const auto r = run_row_following(row_scenario(8.0), 60, PerceptionSource::Pipeline);
  ASSERT_FALSE(r.aborted) << r.cause;
  EXPECT_LT(std::abs(r.final_pose.heading), 2.0);
  EXPECT_EQ(run_row_following(row_scenario(8.0), 10, PerceptionSource::Pipeline).samples[9].pose.heading,
            r.samples[9].pose.heading);
}

TEST(RowFollowing, PipelineAbortsWhenNoRowVisible) {
  Scenario s;
  s.crop_rows = {{400.0, 10.0}};  // far outside the view
  const auto r = run_row_following(s, 5, PerceptionSource::Pipeline);
  EXPECT_TRUE(r.aborted);
  EXPECT_TRUE(r.samples.empty());
  EXPECT_FALSE(r.cause.empty());
}

TEST(TrajectoryCsv, Format) {
  const auto r = run_row_following(row_scenario(10.0), 2, PerceptionSource::Analytic);
  EXPECT_EQ(trajectory_csv(r.samples),
            "t,x,y,heading_deg,delta_theta_deg,omega_deg_s\n"
            "0.000000,0.000000,0.000000,10.000000,-10.000000,-8.000000\n"
            "0.100000,1.971992,0.333537,9.200000,-9.200000,-7.360000\n");
}

}  // namespace
}  // namespace sparrow
