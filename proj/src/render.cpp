#include <cmath>
#include <numbers>
#include <vector>

#include "kernels.hpp"
#include "sparrow/error.hpp"
#include "sparrow/random.hpp"
#include "sparrow/render.hpp"

namespace sparrow {

NoiseModel noise_preset(std::string_view name) {
  if (name == "none") return NoiseModel::none();
  if (name == "field") return NoiseModel::field();
  throw DomainError("unknown noise preset '" + std::string(name) + "'");
}

bool in_band(const Scenario& scenario, const RenderParams& p, std::size_t row,
             double px, double py, double width_scale) {
  const CropRow& r = scenario.crop_rows[row];
  const double w = p.width;
  const double h = p.height;
  const double cb = w / 2.0 + (r.offset - p.lateral_shift) * p.pixels_per_cm;
  const double hb = r.width / 2.0 * p.pixels_per_cm * width_scale;
  const double ct = w / 2.0 + (cb - w / 2.0) * (1.0 - p.convergence) +
                    std::tan(p.lean_deg * std::numbers::pi / 180.0) * h;
  const double ht = hb * (1.0 - p.convergence);
  const double t = (h - py) / h;
  const double center = cb + (ct - cb) * t;
  const double half = hb + (ht - hb) * t;
  return std::abs(px - center) <= half;
}

namespace {

struct Blob {
  double x;
  double y;
  double radius;
};

// Uniform in [0, 1) from a pixel/channel counter.
double hashed_uniform(std::uint64_t seed, std::uint64_t counter) {
  return unit_double(mix64(seed, counter));
}

double hashed_normal(std::uint64_t seed, std::uint64_t counter) {
  double u1 = hashed_uniform(seed, 2 * counter);
  const double u2 = hashed_uniform(seed, 2 * counter + 1);
  if (u1 <= 0.0) u1 = 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace

Rendered render_field(const Scenario& scenario, const RenderParams& p) {
  if (p.width <= 0 || p.height <= 0) throw DomainError("render size must be positive");
  if (!(p.pixels_per_cm > 0.0)) throw DomainError("pixels_per_cm must be > 0");
  if (!(p.convergence >= 0.0 && p.convergence < 1.0)) {
    throw DomainError("convergence must lie in [0, 1)");
  }
  const NoiseModel& noise = p.noise;

  // Blobs are drawn off-row, so reject centres inside any band.
  std::vector<Blob> blobs;
  Rng rng(mix64(p.seed, 0xb10b));
  for (int i = 0, attempts = 0; i < noise.weed_blobs && attempts < 100 * noise.weed_blobs;
       ++attempts) {
    const Blob b{rng.uniform(0.0, p.width), rng.uniform(0.0, p.height),
                 rng.uniform(2.0, 6.0)};
    bool on_row = false;
    for (std::size_t r = 0; r < scenario.crop_rows.size() && !on_row; ++r) {
      on_row = in_band(scenario, p, r, b.x, b.y, 1.0);
    }
    if (!on_row) {
      blobs.push_back(b);
      ++i;
    }
  }

  Rendered out{RasterImage(p.width, p.height), BinaryMask(p.width, p.height)};
  const std::uint64_t pixel_seed = mix64(p.seed, 0x9e7);
  const std::size_t rows = scenario.crop_rows.size();
#pragma omp parallel for schedule(static)
  for (int y = 0; y < p.height; ++y) {
    for (int x = 0; x < p.width; ++x) {
      const double cx = x + 0.5;
      const double cy = y + 0.5;
      const std::uint64_t id = static_cast<std::uint64_t>(y) * p.width + x;

      bool truth = false;
      bool painted = false;
      for (std::size_t r = 0; r < rows; ++r) {
        truth = truth || in_band(scenario, p, r, cx, cy, 1.0);
        painted = painted || in_band(scenario, p, r, cx, cy, noise.canopy_width_scale);
      }
      if (painted && noise.canopy_fill < 1.0) {
        painted = hashed_uniform(pixel_seed, 8 * id) < noise.canopy_fill;
      }
      bool weed = false;
      for (const auto& b : blobs) {
        if (std::hypot(cx - b.x, cy - b.y) <= b.radius) {
          weed = true;
          break;
        }
      }

      const std::uint8_t* base = painted ? kCropRgb : weed ? kWeedRgb : kSoilRgb;
      const double gain = 1.0 + noise.illumination * (2.0 * cx / p.width - 1.0);
      std::uint8_t* dst = out.image.at(x, y);
      for (int c = 0; c < 3; ++c) {
        double v = base[c] * gain;
        if (noise.pixel_sigma > 0.0) {
          v += noise.pixel_sigma * hashed_normal(pixel_seed, 8 * id + 1 + c);
        }
        dst[c] = detail::to_u8(v);
      }
      out.truth.at(x, y) = truth;
    }
  }
  return out;
}

Scenario default_row_scenario() {
  Scenario s;
  s.crop_rows = {{-75.0, 14.0}, {0.0, 14.0}, {75.0, 14.0}};
  return s;
}

std::vector<Rendered> synthetic_corpus(const Scenario& scenario, std::size_t n,
                                       const NoiseModel& noise, std::uint64_t seed,
                                       const RenderParams& base) {
  std::vector<Rendered> frames;
  frames.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng(mix64(seed, i));
    RenderParams p = base;
    p.lean_deg = rng.uniform(-10.0, 10.0);
    p.lateral_shift = rng.uniform(-10.0, 10.0);
    p.noise = noise;
    p.seed = rng.next();
    frames.push_back(render_field(scenario, p));
  }
  return frames;
}

}  // namespace sparrow
