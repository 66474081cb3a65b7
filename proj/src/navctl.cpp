#include <cmath>
#include <numbers>

#include "sparrow/csv.hpp"
#include "sparrow/error.hpp"
#include "sparrow/navctl.hpp"

namespace sparrow {

namespace {
constexpr double kRad = std::numbers::pi / 180.0;
}

double normalize_degrees(double a) {
  a = std::fmod(a, 360.0);
  if (a > 180.0) a -= 360.0;
  if (a <= -180.0) a += 360.0;
  return a;
}

Twist control_step(double delta_theta, double alpha, double speed) {
  return {speed, alpha * delta_theta};
}

RobotPose integrate_pose(const RobotPose& pose, const Twist& twist, double dt) {
  if (!(dt > 0.0)) throw DomainError("integration step dt must be > 0");
  const double mid = (pose.heading + 0.5 * twist.omega * dt) * kRad;
  RobotPose next;
  next.x = pose.x + twist.v * dt * std::cos(mid);
  next.y = pose.y + twist.v * dt * std::sin(mid);
  next.heading = normalize_degrees(pose.heading + twist.omega * dt);
  return next;
}

double analytic_delta_theta(const RobotPose& pose) {
  return -normalize_degrees(pose.heading);
}

RenderParams front_view(const RobotPose& pose, const RenderParams& base) {
  RenderParams p = base;
  p.lean_deg = -normalize_degrees(pose.heading);
  p.lateral_shift = pose.y;
  return p;
}

RowFollowResult run_row_following(const Scenario& scenario, int steps,
                                  PerceptionSource source,
                                  const RenderParams& render,
                                  const PipelineParams& pipeline) {
  if (steps <= 0) throw DomainError("row following needs steps > 0");
  validate_scenario(scenario);
  const auto& gains = scenario.controller;

  RowFollowResult result;
  RobotPose pose{0.0, scenario.mission.start_lateral, scenario.mission.start_heading};
  for (int k = 0; k < steps; ++k) {
    const double t = k * gains.dt;
    double delta = 0.0;
    if (source == PerceptionSource::Analytic) {
      delta = analytic_delta_theta(pose);
    } else {
      RenderParams view = front_view(pose, render);
      view.seed = mix64(render.seed, static_cast<std::uint64_t>(k));
      try {
        delta = run_pipeline(render_field(scenario, view).image, pipeline).row.delta_theta;
      } catch (const NoRowError& e) {
        result.aborted = true;
        result.cause = std::string("row lost at step ") + std::to_string(k) + ": " + e.what();
        break;
      }
    }
    const Twist cmd = control_step(delta, gains.alpha, gains.speed);
    result.samples.push_back({t, pose, delta, cmd.omega});
    pose = integrate_pose(pose, cmd, gains.dt);
  }
  result.final_pose = pose;
  return result;
}

std::string trajectory_csv(const std::vector<TrajectorySample>& samples) {
  CsvWriter csv({"t", "x", "y", "heading_deg", "delta_theta_deg", "omega_deg_s"});
  for (const auto& s : samples) {
    csv.row(s.t, s.pose.x, s.pose.y, s.pose.heading, s.delta_theta, s.omega);
  }
  return csv.str();
}

}  // namespace sparrow
