#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sparrow {

/// 8-bit interleaved RGB raster, row-major from the top-left pixel.
struct RasterImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;  // width * height * 3

  RasterImage() = default;
  RasterImage(int w, int h);

  std::uint8_t* at(int x, int y) { return &data[3 * (static_cast<std::size_t>(y) * width + x)]; }
  const std::uint8_t* at(int x, int y) const {
    return &data[3 * (static_cast<std::size_t>(y) * width + x)];
  }

  friend bool operator==(const RasterImage&, const RasterImage&) = default;
};

struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;

  GrayImage() = default;
  GrayImage(int w, int h, std::uint8_t fill = 0);

  std::uint8_t& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
  std::uint8_t at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;
};

/// One byte per pixel holding 0 or 1.
struct BinaryMask {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;

  BinaryMask() = default;
  BinaryMask(int w, int h, std::uint8_t fill = 0);

  std::uint8_t& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
  std::uint8_t at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
  std::size_t count() const;

  friend bool operator==(const BinaryMask&, const BinaryMask&) = default;
};

// Binary PNM. Readers accept comments in the header and maxval 255 only.
// Errors throw ValidationError.
std::string encode_ppm(const RasterImage& img);
std::string encode_pgm(const GrayImage& img);
std::string encode_mask_pgm(const BinaryMask& mask);  // {0, 255}
RasterImage decode_ppm(const std::string& bytes);
GrayImage decode_pgm(const std::string& bytes);
BinaryMask decode_mask_pgm(const std::string& bytes);  // nonzero -> 1

void write_file(const std::string& path, const std::string& bytes);
std::string read_file(const std::string& path);

}  // namespace sparrow
