#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sparrow/geometry.hpp"
#include "sparrow/sprayer_config.hpp"

namespace sparrow {

struct CropRow {
  double offset = 0.0;  // cm, lateral position of the centreline (right +)
  double width = 10.0;  // cm

  friend bool operator==(const CropRow&, const CropRow&) = default;
};

/// Weed in field coordinates: x lateral (right +), y along the row from the
/// mission start line.
struct Weed {
  GroundPoint position;
  double radius = 1.0;  // cm

  friend bool operator==(const Weed&, const Weed&) = default;
};

struct ControllerGains {
  double alpha = 0.8;  // 1/s, proportional heading gain
  double speed = 20.0; // cm/s, constant linear velocity
  double dt = 0.1;     // s, control period

  friend bool operator==(const ControllerGains&, const ControllerGains&) = default;
};

/// Simulated weed detector. Confidence grows linearly with box area up to
/// reference_area, then saturates at confidence_max.
struct DetectorConfig {
  double detection_range = 51.0;   // cm ahead of the footprint near edge
  double confidence_min = 0.3;
  double confidence_max = 0.95;
  double reference_area = 100.0;   // cm^2
  double miss_rate = 0.0;

  friend bool operator==(const DetectorConfig&, const DetectorConfig&) = default;
};

struct MissionSettings {
  double field_length = 500.0;   // cm of row to traverse
  double start_lateral = 0.0;    // cm, robot lateral start position
  double start_heading = 0.0;    // deg, relative to the row direction
  double signal_latency = 0.01;  // s between chained interrupt/resume signals

  friend bool operator==(const MissionSettings&, const MissionSettings&) = default;
};

struct Scenario {
  CameraFootprint footprint;
  std::vector<CropRow> crop_rows;
  std::vector<Weed> weeds;
  ControllerGains controller;
  SprayerConfig sprayer;
  DetectorConfig detector;
  MissionSettings mission;
  std::uint64_t seed = 1;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

// Throws InvariantError naming the first offending field.
void validate_scenario(const Scenario& s);

// Parses the line-oriented `key = value` document described in README.md.
// Throws ParseError (with line number) or InvariantError.
Scenario load_scenario(std::string_view text);
Scenario load_scenario_file(const std::string& path);

// Writes every field explicitly; load_scenario(serialize_scenario(s)) == s.
std::string serialize_scenario(const Scenario& s);

/// Index of the row nearest the robot centreline (smallest |offset|).
std::size_t central_row_index(const Scenario& s);

}  // namespace sparrow
