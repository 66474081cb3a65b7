#pragma once

#include <string>
#include <vector>

#include "sparrow/perception.hpp"
#include "sparrow/render.hpp"
#include "sparrow/scenario.hpp"

namespace sparrow {

/// Planar pose. x runs along the row, y is lateral (right +), heading is
/// measured from the row direction and grows toward +y. Degrees in (-180, 180].
struct RobotPose {
  double x = 0.0;
  double y = 0.0;
  double heading = 0.0;
};

struct Twist {
  double v = 0.0;      // cm/s
  double omega = 0.0;  // deg/s
};

double normalize_degrees(double a);

// omega = alpha * delta_theta with the configured constant forward speed.
Twist control_step(double delta_theta, double alpha, double speed = 20.0);

// Unicycle step with midpoint heading. Throws DomainError unless dt > 0.
RobotPose integrate_pose(const RobotPose& pose, const Twist& twist, double dt);

enum class PerceptionSource { Analytic, Pipeline };

struct TrajectorySample {
  double t = 0.0;
  RobotPose pose;           // pose at time t, before applying the command
  double delta_theta = 0.0; // measured error at time t
  double omega = 0.0;       // command issued at time t
};

struct RowFollowResult {
  std::vector<TrajectorySample> samples;
  RobotPose final_pose;
  bool aborted = false;
  std::string cause;
};

// Heading error relative to the central row, as the analytic sensor reports
// it (pure heading; lateral offset is not observed).
double analytic_delta_theta(const RobotPose& pose);

// Front-camera render parameters for a pose relative to the rows.
RenderParams front_view(const RobotPose& pose, const RenderParams& base);

/// Closed-loop row following for `steps` control periods. The pipeline
/// source renders a frame per step and aborts on the first NoRowError with
/// the partial trajectory.
RowFollowResult run_row_following(const Scenario& scenario, int steps,
                                  PerceptionSource source,
                                  const RenderParams& render = {},
                                  const PipelineParams& pipeline = {});

std::string trajectory_csv(const std::vector<TrajectorySample>& samples);

}  // namespace sparrow
