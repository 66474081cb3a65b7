#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sparrow/geometry.hpp"
#include "sparrow/planner.hpp"
#include "sparrow/sprayer_config.hpp"

namespace sparrow {

/// Turret pose. pan: 0 = forward, counterclockwise positive seen from above.
/// tilt: 90 = straight down, growing as the nozzle aims farther out.
struct TurretAngles {
  double pan = 0.0;   // deg
  double tilt = 90.0; // deg
};

double max_tilt(const SprayerConfig& cfg);

struct SprayEvent {
  std::size_t target = 0;  // weed id
  TurretAngles angles;
  double r1 = 0.0;         // cm
  double r2 = 0.0;         // cm
  double start_time = 0.0; // s, when the spray begins (after slewing)
  double dwell = 0.0;      // s
  bool covered = false;    // r2 >= weed radius
};

struct SprayLog {
  std::vector<SprayEvent> events;
  double total_time = 0.0;  // s, slews + dwells
};

struct SprayTarget {
  GroundPoint position;
  double radius = 0.0;
  std::size_t id = 0;
};

class OutOfReachError : public std::runtime_error {
 public:
  OutOfReachError(std::size_t target, double r1, double max_reach,
                  SprayLog partial = {});

  std::size_t target() const noexcept { return target_; }
  double r1() const noexcept { return r1_; }
  // Events executed before the unreachable target.
  const SprayLog& partial_log() const noexcept { return partial_; }

 private:
  std::size_t target_;
  double r1_;
  SprayLog partial_;
};

TurretAngles aim_angles(const GroundPoint& target, const SprayerConfig& cfg,
                        std::size_t target_index = 0);

// Ground intersection of the nozzle axis; inverse of aim_angles.
GroundPoint aim_point(const TurretAngles& angles, const SprayerConfig& cfg);

// Piecewise-linear over cfg.spread_knots, clamped outside the knot range.
// Throws DomainError for r1 outside [0, max_reach_r1].
double spread_radius(double r1, const SprayerConfig& cfg);

/// Executes plan.order against targets (indexed as in the plan). The turret
/// starts at its normal pose; slew time is the larger of the pan and tilt
/// deltas over cfg.slew_rate. Throws OutOfReachError carrying the log up to
/// the first unreachable target.
SprayLog execute_plan(const SprayPlan& plan, std::span<const SprayTarget> targets,
                      const SprayerConfig& cfg);

std::string spray_log_csv(const SprayLog& log);

}  // namespace sparrow
