#pragma once

#include <optional>

#include "sparrow/image.hpp"

namespace sparrow {

// Separable Gaussian, kernel radius ceil(3 sigma), clamped edges. sigma = 0
// is the identity; negative sigma throws DomainError.
RasterImage gaussian_blur(const RasterImage& img, double sigma);
GrayImage gaussian_blur(const GrayImage& img, double sigma);

// 2G - R - B rescaled from [-510, 510] to [0, 255].
GrayImage excess_green(const RasterImage& img);
// (G - R) / (G + R + 1e-9) rescaled from [-1, 1] to [0, 255].
GrayImage ndi(const RasterImage& img);

struct Threshold {
  enum class Kind { Fixed, Otsu };
  Kind kind = Kind::Otsu;
  int value = 128;  // Fixed: foreground is pixel >= value

  static Threshold fixed(int t) { return {Kind::Fixed, t}; }
  static Threshold otsu() { return {Kind::Otsu, 0}; }
};

/// Largest background level t (foreground is pixel > t) maximizing the
/// between-class variance; lowest t wins ties. A single-level image returns
/// that level, so it binarizes to an empty mask.
int otsu_threshold(const GrayImage& gray);

BinaryMask binarize(const GrayImage& gray, Threshold method);

enum class MorphOp { Erode, Dilate };

// Square structuring element of odd side `kernel`, zero padding outside the
// image. Throws DomainError for even or non-positive kernels.
BinaryMask morphology(const BinaryMask& mask, MorphOp op, int kernel, int iterations);
BinaryMask opening(const BinaryMask& mask, int kernel, int iterations);

/// Row line from the base midpoint at the bottom edge to the apex on the top
/// edge, in pixel units. delta_theta is positive when the apex lies right of
/// the base midpoint.
struct RowDetection {
  double bottom_intercept = 0.0;  // column of the base midpoint
  double slope = 0.0;             // columns of rightward shift per row upward
  double delta_theta = 0.0;       // deg
  double apex = 0.0;              // apex column on the top edge
  double score = 0.0;             // covered foreground / triangle area
};

/// Sweeps triangles with a fixed base (base_fraction of the width, centred
/// on the bottom edge) and apexes at every pixel boundary of the top edge.
/// Plateaus of equally scored apexes resolve to the midpoint of the extreme
/// maximizers. Throws NoRowError when no triangle covers any foreground.
RowDetection triangle_scan(const BinaryMask& mask, double base_fraction = 1.0 / 3.0);

// |a & b| / |a | b|; 1 when both are empty. Throws ValidationError on size
// mismatch.
double iou(const BinaryMask& a, const BinaryMask& b);

// Sobel gradients, non-maximum suppression and hysteresis on [low, high].
BinaryMask canny(const GrayImage& gray, double low, double high);

// Keeps the bottom `fraction` of the rows.
BinaryMask crop_bottom(const BinaryMask& mask, double fraction);

RasterImage mirror_horizontal(const RasterImage& img);
BinaryMask mirror_horizontal(const BinaryMask& mask);

enum class VegetationIndex { ExcessGreen, Ndi };

struct PipelineParams {
  double blur_sigma = 1.5;
  VegetationIndex index = VegetationIndex::ExcessGreen;
  Threshold threshold = Threshold::otsu();
  int open_kernel = 5;
  int open_iterations = 1;
  double roi_fraction = 0.6;
  double base_fraction = 1.0 / 3.0;
  bool edges = false;  // also emit a Canny edge map for inspection
};

struct PipelineResult {
  BinaryMask mask;  // full-frame segmentation after opening
  RowDetection row;
  GrayImage index_image;
  std::optional<BinaryMask> edges;
};

struct Segmentation {
  GrayImage index_image;
  BinaryMask mask;
};

// The segmentation half of the pipeline: blur -> index -> binarize -> opening.
Segmentation segment(const RasterImage& img, const PipelineParams& params = {});

/// blur -> vegetation index -> binarize -> opening -> ROI crop -> triangle
/// scan. Propagates NoRowError.
PipelineResult run_pipeline(const RasterImage& img, const PipelineParams& params = {});

namespace serial {

// Single-threaded reference kernels; parallel versions must match exactly.
RasterImage gaussian_blur(const RasterImage& img, double sigma);
GrayImage gaussian_blur(const GrayImage& img, double sigma);
GrayImage excess_green(const RasterImage& img);
GrayImage ndi(const RasterImage& img);
// Direct k x k window, no separable decomposition.
BinaryMask morphology(const BinaryMask& mask, MorphOp op, int kernel, int iterations);

}  // namespace serial

std::vector<double> gaussian_kernel(double sigma);

}  // namespace sparrow
