#include <algorithm>
#include <cmath>
#include <string>

#include "sparrow/error.hpp"
#include "sparrow/geometry.hpp"
#include "sparrow/sprayer_config.hpp"

namespace sparrow {

namespace {

// Relative slack for points that sit on the footprint boundary after a
// floating-point round trip.
constexpr double kEdgeSlack = 1e-9;

double cols_per_cm(const CameraFootprint& fp) {
  return fp.image_width > 1 ? (fp.image_width - 1) / fp.width : 0.0;
}

double rows_per_cm(const CameraFootprint& fp) {
  return fp.image_height > 1 ? (fp.image_height - 1) / fp.depth : 0.0;
}

}  // namespace

void validate_footprint(const CameraFootprint& fp) {
  if (!(fp.width > 0.0) || !(fp.depth > 0.0) || fp.image_width <= 0 ||
      fp.image_height <= 0) {
    throw DomainError("camera footprint dimensions must be strictly positive");
  }
}

GroundPoint pixel_to_ground(int col, int row, const CameraFootprint& fp) {
  validate_footprint(fp);
  if (col < 0 || col >= fp.image_width || row < 0 || row >= fp.image_height) {
    throw DomainError("pixel (" + std::to_string(col) + ", " +
                      std::to_string(row) + ") outside " +
                      std::to_string(fp.image_width) + "x" +
                      std::to_string(fp.image_height) + " image");
  }
  const double cpc = cols_per_cm(fp);
  const double rpc = rows_per_cm(fp);
  const double x = cpc > 0.0 ? -fp.width / 2.0 + col / cpc : 0.0;
  const double y = rpc > 0.0 ? fp.depth - row / rpc : fp.depth / 2.0;
  return {x, y};
}

bool inside_footprint(const GroundPoint& p, const CameraFootprint& fp) {
  const double sx = kEdgeSlack * fp.width;
  const double sy = kEdgeSlack * fp.depth;
  return std::isfinite(p.x) && std::isfinite(p.y) &&
         p.x >= -fp.width / 2.0 - sx && p.x <= fp.width / 2.0 + sx &&
         p.y >= -sy && p.y <= fp.depth + sy;
}

PixelCoord ground_to_pixel(const GroundPoint& p, const CameraFootprint& fp) {
  validate_footprint(fp);
  if (!inside_footprint(p, fp)) {
    throw DomainError("ground point (" + std::to_string(p.x) + ", " +
                      std::to_string(p.y) + ") outside camera footprint");
  }
  const double u = (p.x + fp.width / 2.0) * cols_per_cm(fp);
  const double v = (fp.depth - p.y) * rows_per_cm(fp);
  int col = static_cast<int>(std::floor(u + 0.5));
  int row = static_cast<int>(std::floor(v + 0.5));
  // Boundary slack can push a corner half a pixel out.
  col = std::clamp(col, 0, fp.image_width - 1);
  row = std::clamp(row, 0, fp.image_height - 1);
  return {col, row};
}

GroundPoint footprint_center(const CameraFootprint& fp) {
  validate_footprint(fp);
  return {0.0, fp.depth / 2.0};
}

void validate_sprayer_config(const SprayerConfig& cfg) {
  if (!(cfg.mount_height > 0.0)) throw DomainError("mount_height must be > 0");
  if (!(cfg.max_reach_r1 > 0.0)) throw DomainError("max_reach_r1 must be > 0");
  if (!(cfg.dwell_time > 0.0)) throw DomainError("dwell_time must be > 0");
  if (!(cfg.slew_rate > 0.0)) throw DomainError("slew_rate must be > 0");
  if (cfg.spread_knots.empty()) throw DomainError("spread_knots must not be empty");
  for (std::size_t i = 1; i < cfg.spread_knots.size(); ++i) {
    if (!(cfg.spread_knots[i].r1 > cfg.spread_knots[i - 1].r1)) {
      throw DomainError("spread_knots must be strictly increasing in r1");
    }
  }
}

}  // namespace sparrow
