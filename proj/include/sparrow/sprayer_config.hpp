#pragma once

#include <vector>

#include "sparrow/geometry.hpp"

namespace sparrow {

struct SpreadKnot {
  double r1 = 0.0;  // cm from the nozzle's normal aim point
  double r2 = 0.0;  // cm radius of the liquid footprint

  friend bool operator==(const SpreadKnot&, const SpreadKnot&) = default;
};

/// Measured spread: 1 cm flat out to 50 cm, then linear to 14 cm at 161 cm.
inline std::vector<SpreadKnot> default_spread_knots() {
  return {{0.0, 1.0}, {50.0, 1.0}, {161.0, 14.0}};
}

struct SprayerConfig {
  double mount_height = 70.0;           // cm above ground
  GroundPoint mount_point{0.0, 25.5};   // ground point under the nozzle
  double max_reach_r1 = 161.0;          // cm
  double dwell_time = 0.5;              // s per target
  double slew_rate = 90.0;              // deg/s, pan and tilt move together
  std::vector<SpreadKnot> spread_knots = default_spread_knots();

  friend bool operator==(const SprayerConfig&, const SprayerConfig&) = default;
};

// Throws DomainError on non-positive height/dwell/slew or non-increasing knots.
void validate_sprayer_config(const SprayerConfig& cfg);

}  // namespace sparrow
