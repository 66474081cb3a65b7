#pragma once

// Per-row kernels shared by the OpenMP and serial paths so both perform the
// same arithmetic in the same order.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

namespace sparrow::detail {

inline std::uint8_t to_u8(double v) {
  return static_cast<std::uint8_t>(std::clamp(std::floor(v + 0.5), 0.0, 255.0));
}

inline std::uint8_t exg_value(int r, int g, int b) {
  return to_u8((2 * g - r - b + 510) / 4.0);
}

inline std::uint8_t ndi_value(int r, int g, int /*b*/) {
  const double ratio = (g - r) / (g + r + 1e-9);
  return to_u8((ratio + 1.0) * 127.5);
}

// Horizontal pass for one row of a C-channel image into a double buffer.
template <int C>
void blur_row(const std::uint8_t* src, double* dst, int width,
              std::span<const double> kernel) {
  const int radius = static_cast<int>(kernel.size()) / 2;
  for (int x = 0; x < width; ++x) {
    for (int c = 0; c < C; ++c) {
      double acc = 0.0;
      for (int k = -radius; k <= radius; ++k) {
        const int xx = std::clamp(x + k, 0, width - 1);
        acc += kernel[k + radius] * src[xx * C + c];
      }
      dst[x * C + c] = acc;
    }
  }
}

// Vertical pass producing output row y from the horizontal buffer.
template <int C>
void blur_column(const std::vector<double>& tmp, std::uint8_t* dst, int width,
                 int height, int y, std::span<const double> kernel) {
  const int radius = static_cast<int>(kernel.size()) / 2;
  const std::size_t stride = static_cast<std::size_t>(width) * C;
  for (std::size_t i = 0; i < stride; ++i) {
    double acc = 0.0;
    for (int k = -radius; k <= radius; ++k) {
      const int yy = std::clamp(y + k, 0, height - 1);
      acc += kernel[k + radius] * tmp[yy * stride + i];
    }
    dst[i] = to_u8(acc);
  }
}

}  // namespace sparrow::detail
