#pragma once

#include <cmath>

namespace sparrow {

/// A point on the ground plane in centimetres. x is lateral (positive to the
/// right of the robot centreline), y is forward. In the robot-local frame the
/// origin sits on the centreline at the near edge of the camera footprint.
struct GroundPoint {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const GroundPoint&, const GroundPoint&) = default;
};

inline double distance(const GroundPoint& a, const GroundPoint& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

/// Flattened ground coverage of the downward weed camera.
struct CameraFootprint {
  double width = 96.0;   // cm
  double depth = 51.0;   // cm
  int image_width = 960;
  int image_height = 510;

  friend bool operator==(const CameraFootprint&, const CameraFootprint&) = default;
};

struct PixelCoord {
  int col = 0;
  int row = 0;

  friend bool operator==(const PixelCoord&, const PixelCoord&) = default;
};

// Affine flat-ground mapping. Pixel (0,0) is the far-left corner
// (-width/2, depth); the last pixel is the near-right corner (width/2, 0).
GroundPoint pixel_to_ground(int col, int row, const CameraFootprint& fp);

// Inverse of pixel_to_ground with round-half-up quantization. Throws
// DomainError for points outside the footprint rectangle.
PixelCoord ground_to_pixel(const GroundPoint& p, const CameraFootprint& fp);

bool inside_footprint(const GroundPoint& p, const CameraFootprint& fp);

/// Turret reference point: centre of the camera coverage.
GroundPoint footprint_center(const CameraFootprint& fp);

// Throws DomainError unless every dimension is strictly positive.
void validate_footprint(const CameraFootprint& fp);

}  // namespace sparrow
