#include "kernels.hpp"
#include "sparrow/error.hpp"
#include "sparrow/perception.hpp"

namespace sparrow::serial {

namespace {

template <int C, typename Image>
Image blur(const Image& img, double sigma) {
  const auto kernel = gaussian_kernel(sigma);
  if (kernel.size() == 1) return img;
  const std::size_t stride = static_cast<std::size_t>(img.width) * C;
  std::vector<double> tmp(stride * img.height);
  for (int y = 0; y < img.height; ++y) {
    detail::blur_row<C>(&img.data[y * stride], &tmp[y * stride], img.width, kernel);
  }
  Image out = img;
  for (int y = 0; y < img.height; ++y) {
    detail::blur_column<C>(tmp, &out.data[y * stride], img.width, img.height, y, kernel);
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
  GrayImage out(img.width, img.height);
  for (std::size_t i = 0; i < out.data.size(); ++i) {
    out.data[i] = detail::exg_value(img.data[3 * i], img.data[3 * i + 1],
                                    img.data[3 * i + 2]);
  }
  return out;
}

GrayImage ndi(const RasterImage& img) {
  GrayImage out(img.width, img.height);
  for (std::size_t i = 0; i < out.data.size(); ++i) {
    out.data[i] = detail::ndi_value(img.data[3 * i], img.data[3 * i + 1],
                                    img.data[3 * i + 2]);
  }
  return out;
}

BinaryMask morphology(const BinaryMask& mask, MorphOp op, int kernel, int iterations) {
  if (kernel < 1 || kernel % 2 == 0) {
    throw DomainError("morphology kernel must be odd and >= 1");
  }
  if (iterations < 0) throw DomainError("morphology iterations must be >= 0");
  const int r = kernel / 2;
  BinaryMask cur = mask;
  for (int it = 0; it < iterations; ++it) {
    BinaryMask next(cur.width, cur.height);
    for (int y = 0; y < cur.height; ++y) {
      for (int x = 0; x < cur.width; ++x) {
        bool all = true;
        bool any = false;
        for (int dy = -r; dy <= r; ++dy) {
          for (int dx = -r; dx <= r; ++dx) {
            const int xx = x + dx;
            const int yy = y + dy;
            const bool v = xx >= 0 && yy >= 0 && xx < cur.width &&
                           yy < cur.height && cur.at(xx, yy);
            all = all && v;
            any = any || v;
          }
        }
        next.at(x, y) = op == MorphOp::Erode ? all : any;
      }
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace sparrow::serial
