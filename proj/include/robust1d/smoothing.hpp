#pragma once

#include <cstddef>
#include <vector>

#include "robust1d/samples.hpp"

namespace robust1d {

/// Row-major grayscale image with intensities in [0, 1].
class GrayImage {
 public:
  /// Throws Error(InvalidArgument) on zero dimensions, size mismatch or
  /// pixels outside [0, 1].
  GrayImage(std::size_t width, std::size_t height, std::vector<double> pixels);

  /// Image filled with `value`.
  static GrayImage filled(std::size_t width, std::size_t height, double value);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  const std::vector<double>& pixels() const noexcept { return pixels_; }

  double at(std::size_t x, std::size_t y) const noexcept { return pixels_[y * width_ + x]; }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<double> pixels_;
};

struct SmoothingConfig {
  int window_radius = 2;
  double sigma = 1.5;
  Cutoff cutoff{0.1};

  /// Throws Error(InvalidArgument) unless radius >= 1 and sigma is finite and > 0.
  void validate() const;
};

/// Spatial weights exp(-(dx^2 + dy^2) / (2 sigma^2)) on a (2r+1)^2 grid,
/// row-major with dy outermost. Not normalized; the center weight is 1.
class GaussianWeights {
 public:
  GaussianWeights(int radius, double sigma);

  int radius() const noexcept { return radius_; }
  int side() const noexcept { return 2 * radius_ + 1; }
  double at(int dx, int dy) const noexcept {
    return weights_[static_cast<std::size_t>((dy + radius_) * side() + (dx + radius_))];
  }
  const std::vector<double>& values() const noexcept { return weights_; }

 private:
  int radius_;
  std::vector<double> weights_;
};

inline GaussianWeights gaussian_weights(int radius, double sigma) { return {radius, sigma}; }

/// Edge-preserving smoothing: every output pixel is the exact robust mean of
/// its window's intensities weighted by the Gaussian grid. Windows are
/// truncated at the image border. Rows are split across `threads` workers
/// (0 selects the hardware concurrency); the result does not depend on it.
GrayImage smooth_image(const GrayImage& img, const SmoothingConfig& config, unsigned threads = 1);

}  // namespace robust1d
