#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "sparrow/error.hpp"
#include "sparrow/image.hpp"

namespace sparrow {

RasterImage::RasterImage(int w, int h)
    : width(w), height(h), data(static_cast<std::size_t>(w) * h * 3, 0) {
  if (w <= 0 || h <= 0) throw DomainError("image dimensions must be positive");
}

GrayImage::GrayImage(int w, int h, std::uint8_t fill)
    : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {
  if (w <= 0 || h <= 0) throw DomainError("image dimensions must be positive");
}

BinaryMask::BinaryMask(int w, int h, std::uint8_t fill)
    : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {
  if (w <= 0 || h <= 0) throw DomainError("mask dimensions must be positive");
}

std::size_t BinaryMask::count() const {
  return static_cast<std::size_t>(std::count_if(
      data.begin(), data.end(), [](std::uint8_t v) { return v != 0; }));
}

namespace {

std::string header(const char* magic, int w, int h) {
  return std::string(magic) + "\n" + std::to_string(w) + " " +
         std::to_string(h) + "\n255\n";
}

struct PnmHeader {
  int width = 0;
  int height = 0;
  std::size_t offset = 0;  // first raster byte
};

PnmHeader parse_header(const std::string& bytes, const char* magic) {
  if (bytes.size() < 2 || bytes.compare(0, 2, magic) != 0) {
    throw ValidationError(std::string("not a binary ") + magic + " file");
  }
  std::size_t pos = 2;
  auto next_int = [&]() {
    while (pos < bytes.size()) {
      if (std::isspace(static_cast<unsigned char>(bytes[pos]))) {
        ++pos;
      } else if (bytes[pos] == '#') {
        while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
      } else {
        break;
      }
    }
    long value = 0;
    const std::size_t start = pos;
    while (pos < bytes.size() && std::isdigit(static_cast<unsigned char>(bytes[pos]))) {
      value = value * 10 + (bytes[pos] - '0');
      if (value > 1'000'000) throw ValidationError("PNM header value too large");
      ++pos;
    }
    if (pos == start) throw ValidationError("malformed PNM header");
    return static_cast<int>(value);
  };
  PnmHeader h;
  h.width = next_int();
  h.height = next_int();
  const int maxval = next_int();
  if (h.width <= 0 || h.height <= 0) throw ValidationError("PNM dimensions must be positive");
  if (maxval != 255) throw ValidationError("only 8-bit PNM (maxval 255) is supported");
  if (pos >= bytes.size() || !std::isspace(static_cast<unsigned char>(bytes[pos]))) {
    throw ValidationError("malformed PNM header");
  }
  h.offset = pos + 1;
  return h;
}

}  // namespace

std::string encode_ppm(const RasterImage& img) {
  std::string out = header("P6", img.width, img.height);
  out.append(img.data.begin(), img.data.end());
  return out;
}

std::string encode_pgm(const GrayImage& img) {
  std::string out = header("P5", img.width, img.height);
  out.append(img.data.begin(), img.data.end());
  return out;
}

std::string encode_mask_pgm(const BinaryMask& mask) {
  std::string out = header("P5", mask.width, mask.height);
  for (auto v : mask.data) out.push_back(static_cast<char>(v ? 255 : 0));
  return out;
}

RasterImage decode_ppm(const std::string& bytes) {
  const auto h = parse_header(bytes, "P6");
  RasterImage img(h.width, h.height);
  if (bytes.size() - h.offset != img.data.size()) {
    throw ValidationError("PPM raster size does not match header");
  }
  std::copy(bytes.begin() + static_cast<std::ptrdiff_t>(h.offset), bytes.end(),
            img.data.begin());
  return img;
}

GrayImage decode_pgm(const std::string& bytes) {
  const auto h = parse_header(bytes, "P5");
  GrayImage img(h.width, h.height);
  if (bytes.size() - h.offset != img.data.size()) {
    throw ValidationError("PGM raster size does not match header");
  }
  std::copy(bytes.begin() + static_cast<std::ptrdiff_t>(h.offset), bytes.end(),
            img.data.begin());
  return img;
}

BinaryMask decode_mask_pgm(const std::string& bytes) {
  const GrayImage g = decode_pgm(bytes);
  BinaryMask m(g.width, g.height);
  std::transform(g.data.begin(), g.data.end(), m.data.begin(),
                 [](std::uint8_t v) { return static_cast<std::uint8_t>(v != 0); });
  return m;
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace sparrow
