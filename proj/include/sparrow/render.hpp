#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "sparrow/image.hpp"
#include "sparrow/random.hpp"
#include "sparrow/scenario.hpp"

namespace sparrow {

/// Disturbances applied to a synthetic frame. The ground-truth mask always
/// marks the full nominal crop band.
struct NoiseModel {
  double pixel_sigma = 0.0;        // per-channel Gaussian noise, grey levels
  double canopy_fill = 1.0;        // probability a crop pixel is painted green
  double canopy_width_scale = 1.0; // painted band width relative to nominal
  int weed_blobs = 0;              // off-row green blobs
  double illumination = 0.0;       // +- fraction of brightness, left to right

  static NoiseModel none() { return {}; }
  static NoiseModel field() { return {22.0, 0.6, 0.75, 30, 0.25}; }
};

// "none" or "field"; throws DomainError otherwise.
NoiseModel noise_preset(std::string_view name);

struct RenderParams {
  int width = 320;
  int height = 240;
  double pixels_per_cm = 2.0;   // at the bottom edge
  double convergence = 0.5;     // fraction rows shrink toward the top edge
  double lean_deg = 0.0;        // rotation of the row lines (right +)
  double lateral_shift = 0.0;   // cm, robot lateral position
  NoiseModel noise;
  std::uint64_t seed = 1;
};

struct Rendered {
  RasterImage image;
  BinaryMask truth;
};

inline constexpr std::uint8_t kSoilRgb[3] = {115, 85, 60};
inline constexpr std::uint8_t kCropRgb[3] = {45, 150, 50};
inline constexpr std::uint8_t kWeedRgb[3] = {90, 135, 40};

/// Front-camera view of the crop rows as straight bands converging toward
/// the top edge. Deterministic in (scenario rows, params); pixel noise is
/// counter-hashed so the output does not depend on the thread count.
Rendered render_field(const Scenario& scenario, const RenderParams& params);

// Exact band membership of image-plane point (px, py) for row i. Pixel
// (x, y) is tested at its centre (x + 0.5, y + 0.5).
bool in_band(const Scenario& scenario, const RenderParams& params, std::size_t row,
             double px, double py, double width_scale = 1.0);

// Three 14 cm rows, 75 cm apart, centred on the robot.
Scenario default_row_scenario();

/// n frames with per-frame lean in [-10, 10] deg and lateral shift in
/// [-10, 10] cm, drawn from seed. Frame i depends only on (seed, i).
std::vector<Rendered> synthetic_corpus(const Scenario& scenario, std::size_t n,
                                       const NoiseModel& noise, std::uint64_t seed,
                                       const RenderParams& base = {});

}  // namespace sparrow
