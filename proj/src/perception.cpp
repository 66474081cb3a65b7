#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <cstdint>
#include <numbers>
#include <vector>

#include "kernels.hpp"
#include "sparrow/error.hpp"
#include "sparrow/perception.hpp"

namespace sparrow {

std::vector<double> gaussian_kernel(double sigma) {
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
    throw DomainError("blur sigma must be finite and >= 0");
  }
  if (sigma == 0.0) return {1.0};
  const int radius = static_cast<int>(std::ceil(3.0 * sigma));
  std::vector<double> k(2 * radius + 1);
  double sum = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    k[i + radius] = std::exp(-(i * i) / (2.0 * sigma * sigma));
    sum += k[i + radius];
  }
  for (auto& w : k) w /= sum;
  return k;
}

namespace {

template <int C, typename Image>
Image blur(const Image& img, double sigma) {
  const auto kernel = gaussian_kernel(sigma);
  if (kernel.size() == 1) return img;
  const std::size_t stride = static_cast<std::size_t>(img.width) * C;
  std::vector<double> tmp(stride * img.height);
  Image out = img;
#pragma omp parallel
  {
#pragma omp for schedule(static)
    for (int y = 0; y < img.height; ++y) {
      detail::blur_row<C>(&img.data[y * stride], &tmp[y * stride], img.width, kernel);
    }
#pragma omp for schedule(static)
    for (int y = 0; y < img.height; ++y) {
      detail::blur_column<C>(tmp, &out.data[y * stride], img.width, img.height, y,
                             kernel);
    }
  }
  return out;
}

template <typename F>
GrayImage pointwise(const RasterImage& img, F f) {
  GrayImage out(img.width, img.height);
  const auto n = static_cast<long>(out.data.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) {
    out.data[i] = f(img.data[3 * i], img.data[3 * i + 1], img.data[3 * i + 2]);
  }
  return out;
}

void check_kernel(int kernel, int iterations) {
  if (kernel < 1 || kernel % 2 == 0) {
    throw DomainError("morphology kernel must be odd and >= 1, got " +
                      std::to_string(kernel));
  }
  if (iterations < 0) throw DomainError("morphology iterations must be >= 0");
}

// One separable pass of a 1-D window of radius r. Erosion keeps a pixel when
// the whole window (zero-padded) is set, dilation when any of it is.
BinaryMask morph_pass(const BinaryMask& in, MorphOp op, int r, bool horizontal) {
  BinaryMask out(in.width, in.height);
  const int window = 2 * r + 1;
  const int lines = horizontal ? in.height : in.width;
  const int len = horizontal ? in.width : in.height;
#pragma omp parallel
  {
    std::vector<int> prefix(len + 1);
#pragma omp for schedule(static)
    for (int line = 0; line < lines; ++line) {
      auto get = [&](int i) {
        return horizontal ? in.at(i, line) : in.at(line, i);
      };
      prefix[0] = 0;
      for (int i = 0; i < len; ++i) prefix[i + 1] = prefix[i] + get(i);
      for (int i = 0; i < len; ++i) {
        const int lo = std::max(0, i - r);
        const int hi = std::min(len - 1, i + r);
        const int ones = prefix[hi + 1] - prefix[lo];
        const std::uint8_t v = op == MorphOp::Erode ? ones == window : ones > 0;
        if (horizontal) {
          out.at(i, line) = v;
        } else {
          out.at(line, i) = v;
        }
      }
    }
  }
  return out;
}

}  // namespace

RasterImage gaussian_blur(const RasterImage& img, double sigma) {
  return blur<3>(img, sigma);
}

GrayImage gaussian_blur(const GrayImage& img, double sigma) {
  return blur<1>(img, sigma);
}

GrayImage excess_green(const RasterImage& img) {
  return pointwise(img, detail::exg_value);
}

GrayImage ndi(const RasterImage& img) { return pointwise(img, detail::ndi_value); }

int otsu_threshold(const GrayImage& gray) {
  std::array<std::uint64_t, 256> hist{};
  for (auto v : gray.data) ++hist[v];
  const double total = static_cast<double>(gray.data.size());
  double sum_all = 0.0;
  for (int v = 0; v < 256; ++v) sum_all += static_cast<double>(v) * hist[v];

  // With a single grey level there is nothing to split: put it all in the
  // background.
  int best_t = 255;
  while (best_t > 0 && hist[best_t] == 0) --best_t;
  double best_var = -1.0;
  double n0 = 0.0;
  double s0 = 0.0;
  for (int t = 0; t < 256; ++t) {
    n0 += static_cast<double>(hist[t]);
    s0 += static_cast<double>(t) * hist[t];
    const double n1 = total - n0;
    if (n0 == 0.0 || n1 == 0.0) continue;
    const double diff = s0 / n0 - (sum_all - s0) / n1;
    const double var = n0 * n1 * diff * diff / (total * total);
    if (var > best_var) {
      best_var = var;
      best_t = t;
    }
  }
  return best_t;
}

BinaryMask binarize(const GrayImage& gray, Threshold method) {
  const int cut = method.kind == Threshold::Kind::Fixed ? method.value
                                                        : otsu_threshold(gray) + 1;
  BinaryMask out(gray.width, gray.height);
  for (std::size_t i = 0; i < gray.data.size(); ++i) {
    out.data[i] = gray.data[i] >= cut;
  }
  return out;
}

BinaryMask morphology(const BinaryMask& mask, MorphOp op, int kernel, int iterations) {
  check_kernel(kernel, iterations);
  BinaryMask cur = mask;
  const int r = kernel / 2;
  if (r == 0) return cur;
  for (int it = 0; it < iterations; ++it) {
    cur = morph_pass(morph_pass(cur, op, r, true), op, r, false);
  }
  return cur;
}

BinaryMask opening(const BinaryMask& mask, int kernel, int iterations) {
  return morphology(morphology(mask, MorphOp::Erode, kernel, iterations),
                    MorphOp::Dilate, kernel, iterations);
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

}  // namespace

RowDetection triangle_scan(const BinaryMask& mask, double base_fraction) {
  const int w = mask.width;
  const int h = mask.height;
  if (w <= 0 || h <= 0) throw DomainError("triangle scan needs a non-empty mask");
  if (mask.count() == 0) throw NoRowError("segmentation mask has no foreground");

  // Work in doubled column units so pixel centres (2c + 1), the apex and the
  // base corners are all integers and membership tests are exact.
  const std::int64_t half_base =
      std::max<std::int64_t>(1, std::llround(w * base_fraction / 2.0));
  const std::int64_t base_left = w - 2 * half_base;
  const std::int64_t base_right = w + 2 * half_base;
  const std::int64_t two_h = 2 * static_cast<std::int64_t>(h);

  std::vector<std::vector<int>> prefix(h, std::vector<int>(w + 1, 0));
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) prefix[y][x + 1] = prefix[y][x] + mask.at(x, y);
  }

  std::vector<long> counts(w + 1, 0);
#pragma omp parallel for schedule(static)
  for (int xa = 0; xa <= w; ++xa) {
    const std::int64_t apex = 2 * static_cast<std::int64_t>(xa);
    long count = 0;
    for (int y = 0; y < h; ++y) {
      const std::int64_t f = 2 * static_cast<std::int64_t>(y) + 1;
      // Column c is inside when left <= 2c+1 <= right at this row, where
      // left = apex + (base_left - apex) * f / 2h.
      const std::int64_t num_l = apex * two_h + (base_left - apex) * f;
      const std::int64_t num_r = apex * two_h + (base_right - apex) * f;
      std::int64_t lo = ceil_div(num_l - two_h, 2 * two_h);
      std::int64_t hi = floor_div(num_r - two_h, 2 * two_h);
      lo = std::max<std::int64_t>(lo, 0);
      hi = std::min<std::int64_t>(hi, w - 1);
      if (lo <= hi) count += prefix[y][hi + 1] - prefix[y][lo];
    }
    counts[xa] = count;
  }

  long best = 0;
  int first = -1;
  int last = -1;
  for (int xa = 0; xa <= w; ++xa) {
    if (counts[xa] > best) {
      best = counts[xa];
      first = last = xa;
    } else if (counts[xa] == best && best > 0) {
      last = xa;
    }
  }
  if (best == 0) throw NoRowError("no triangle covers any foreground");

  RowDetection det;
  det.apex = 0.5 * (first + last);
  det.bottom_intercept = w / 2.0;
  det.slope = (det.apex - det.bottom_intercept) / h;
  det.delta_theta = std::atan2(det.apex - det.bottom_intercept, h) * 180.0 /
                    std::numbers::pi;
  det.score = static_cast<double>(best) / (0.5 * static_cast<double>(half_base) * 2 * h);
  return det;
}

double iou(const BinaryMask& a, const BinaryMask& b) {
  if (a.width != b.width || a.height != b.height) {
    throw ValidationError("iou requires masks of equal dimensions");
  }
  std::size_t inter = 0;
  std::size_t uni = 0;
  for (std::size_t i = 0; i < a.data.size(); ++i) {
    const bool x = a.data[i] != 0;
    const bool y = b.data[i] != 0;
    inter += x && y;
    uni += x || y;
  }
  return uni == 0 ? 1.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

BinaryMask canny(const GrayImage& gray, double low, double high) {
  const int w = gray.width;
  const int h = gray.height;
  std::vector<double> mag(static_cast<std::size_t>(w) * h, 0.0);
  std::vector<std::uint8_t> dir(mag.size(), 0);
  auto px = [&](int x, int y) {
    return static_cast<double>(gray.at(std::clamp(x, 0, w - 1), std::clamp(y, 0, h - 1)));
  };
#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double gx = px(x + 1, y - 1) + 2 * px(x + 1, y) + px(x + 1, y + 1) -
                        px(x - 1, y - 1) - 2 * px(x - 1, y) - px(x - 1, y + 1);
      const double gy = px(x - 1, y + 1) + 2 * px(x, y + 1) + px(x + 1, y + 1) -
                        px(x - 1, y - 1) - 2 * px(x, y - 1) - px(x + 1, y - 1);
      const std::size_t i = static_cast<std::size_t>(y) * w + x;
      mag[i] = std::hypot(gx, gy);
      double angle = std::atan2(gy, gx) * 180.0 / std::numbers::pi;
      if (angle < 0) angle += 180.0;
      dir[i] = angle < 22.5 || angle >= 157.5 ? 0 : angle < 67.5 ? 1 : angle < 112.5 ? 2 : 3;
    }
  }

  // 0 = suppressed, 1 = weak, 2 = strong
  std::vector<std::uint8_t> level(mag.size(), 0);
  static constexpr int kDx[4] = {1, 1, 0, -1};
  static constexpr int kDy[4] = {0, 1, 1, 1};
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const std::size_t i = static_cast<std::size_t>(y) * w + x;
      const double m = mag[i];
      if (m < low) continue;
      const int d = dir[i];
      auto at = [&](int xx, int yy) {
        if (xx < 0 || yy < 0 || xx >= w || yy >= h) return 0.0;
        return mag[static_cast<std::size_t>(yy) * w + xx];
      };
      if (m < at(x + kDx[d], y + kDy[d]) || m < at(x - kDx[d], y - kDy[d])) continue;
      level[i] = m >= high ? 2 : 1;
    }
  }

  BinaryMask out(w, h);
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < level.size(); ++i) {
    if (level[i] == 2) stack.push_back(i);
  }
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    if (out.data[i]) continue;
    out.data[i] = 1;
    const int x = static_cast<int>(i % w);
    const int y = static_cast<int>(i / w);
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dx = -1; dx <= 1; ++dx) {
        const int xx = x + dx;
        const int yy = y + dy;
        if (xx < 0 || yy < 0 || xx >= w || yy >= h) continue;
        const std::size_t j = static_cast<std::size_t>(yy) * w + xx;
        if (level[j] != 0 && !out.data[j]) stack.push_back(j);
      }
    }
  }
  return out;
}

BinaryMask crop_bottom(const BinaryMask& mask, double fraction) {
  if (!(fraction > 0.0) || fraction > 1.0) {
    throw DomainError("ROI fraction must lie in (0, 1]");
  }
  const int rows = std::clamp(static_cast<int>(std::lround(mask.height * fraction)), 1,
                              mask.height);
  BinaryMask out(mask.width, rows);
  const std::size_t skip = static_cast<std::size_t>(mask.height - rows) * mask.width;
  std::copy(mask.data.begin() + static_cast<std::ptrdiff_t>(skip), mask.data.end(),
            out.data.begin());
  return out;
}

RasterImage mirror_horizontal(const RasterImage& img) {
  RasterImage out(img.width, img.height);
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      std::copy_n(img.at(x, y), 3, out.at(img.width - 1 - x, y));
    }
  }
  return out;
}

BinaryMask mirror_horizontal(const BinaryMask& mask) {
  BinaryMask out(mask.width, mask.height);
  for (int y = 0; y < mask.height; ++y) {
    for (int x = 0; x < mask.width; ++x) {
      out.at(mask.width - 1 - x, y) = mask.at(x, y);
    }
  }
  return out;
}

Segmentation segment(const RasterImage& img, const PipelineParams& params) {
  Segmentation seg;
  const RasterImage blurred = gaussian_blur(img, params.blur_sigma);
  seg.index_image = params.index == VegetationIndex::ExcessGreen ? excess_green(blurred)
                                                                 : ndi(blurred);
  seg.mask = opening(binarize(seg.index_image, params.threshold), params.open_kernel,
                     params.open_iterations);
  return seg;
}

PipelineResult run_pipeline(const RasterImage& img, const PipelineParams& params) {
  PipelineResult result;
  Segmentation seg = segment(img, params);
  result.index_image = std::move(seg.index_image);
  result.mask = std::move(seg.mask);
  if (params.edges) {
    result.edges = canny(result.index_image, 20.0, 60.0);
  }
  result.row = triangle_scan(crop_bottom(result.mask, params.roi_fraction),
                             params.base_fraction);
  return result;
}

}  // namespace sparrow
