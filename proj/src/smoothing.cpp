#include "robust1d/smoothing.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>
#include <thread>
#include <utility>

#include "robust1d/error.hpp"
#include "robust1d/estimator.hpp"

namespace robust1d {

GrayImage::GrayImage(std::size_t width, std::size_t height, std::vector<double> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width_ == 0 || height_ == 0) throw Error(ErrorKind::InvalidArgument, "image dimensions must be positive");
  if (pixels_.size() != width_ * height_) {
    throw Error(ErrorKind::InvalidArgument, "pixel count " + std::to_string(pixels_.size()) +
                                                " does not match " + std::to_string(width_) + "x" +
                                                std::to_string(height_));
  }
  for (double p : pixels_) {
    if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::InvalidArgument, "pixel intensity outside [0, 1]");
  }
}

GrayImage GrayImage::filled(std::size_t width, std::size_t height, double value) {
  return GrayImage(width, height, std::vector<double>(width * height, value));
}

void SmoothingConfig::validate() const {
  if (window_radius < 1) throw Error(ErrorKind::InvalidArgument, "window radius must be >= 1");
  if (!std::isfinite(sigma) || !(sigma > 0.0)) throw Error(ErrorKind::InvalidArgument, "sigma must be finite and > 0");
}

GaussianWeights::GaussianWeights(int radius, double sigma) : radius_(radius) {
  if (radius < 1) throw Error(ErrorKind::InvalidArgument, "window radius must be >= 1");
  if (!std::isfinite(sigma) || !(sigma > 0.0)) throw Error(ErrorKind::InvalidArgument, "sigma must be finite and > 0");
  const double denom = 2.0 * sigma * sigma;
  weights_.reserve(static_cast<std::size_t>(side() * side()));
  for (int dy = -radius; dy <= radius; ++dy) {
    for (int dx = -radius; dx <= radius; ++dx) {
      weights_.push_back(std::exp(-static_cast<double>(dx * dx + dy * dy) / denom));
    }
  }
}

namespace {

struct WindowBuffers {
  std::vector<std::pair<double, double>> pairs;  // (intensity, weight)
  std::vector<double> values;
  std::vector<double> weights;
};

void smooth_rows(const GrayImage& img, const GaussianWeights& kernel, Cutoff cutoff, std::size_t row_begin,
                 std::size_t row_end, std::vector<double>& out) {
  const auto w = static_cast<long long>(img.width());
  const auto h = static_cast<long long>(img.height());
  const int r = kernel.radius();
  WindowBuffers buf;

  for (auto y = static_cast<long long>(row_begin); y < static_cast<long long>(row_end); ++y) {
    for (long long x = 0; x < w; ++x) {
      buf.pairs.clear();
      for (int dy = -r; dy <= r; ++dy) {
        const long long yy = y + dy;
        if (yy < 0 || yy >= h) continue;
        for (int dx = -r; dx <= r; ++dx) {
          const long long xx = x + dx;
          if (xx < 0 || xx >= w) continue;
          buf.pairs.emplace_back(img.at(static_cast<std::size_t>(xx), static_cast<std::size_t>(yy)),
                                 kernel.at(dx, dy));
        }
      }
      // Full (value, weight) ordering makes the sample sequence independent of
      // the scan order, so mirrored inputs give bit-identical results.
      std::sort(buf.pairs.begin(), buf.pairs.end());
      buf.values.resize(buf.pairs.size());
      buf.weights.resize(buf.pairs.size());
      for (std::size_t k = 0; k < buf.pairs.size(); ++k) {
        buf.values[k] = buf.pairs[k].first;
        buf.weights[k] = buf.pairs[k].second;
      }
      const double m = exact_robust_mean(SampleView::from_sorted(buf.values, buf.weights), cutoff).mean;
      assert(m >= 0.0 && m <= 1.0);
      out[static_cast<std::size_t>(y * w + x)] = m;
    }
  }
}

}  // namespace

GrayImage smooth_image(const GrayImage& img, const SmoothingConfig& config, unsigned threads) {
  config.validate();
  const GaussianWeights kernel(config.window_radius, config.sigma);
  std::vector<double> out(img.pixels().size());

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t rows = img.height();
  const std::size_t workers = std::min<std::size_t>(threads, rows);

  if (workers <= 1) {
    smooth_rows(img, kernel, config.cutoff, 0, rows, out);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) {
      const std::size_t begin = rows * t / workers;
      const std::size_t end = rows * (t + 1) / workers;
      pool.emplace_back([&, begin, end] { smooth_rows(img, kernel, config.cutoff, begin, end, out); });
    }
    for (auto& th : pool) th.join();
  }
  return GrayImage(img.width(), img.height(), std::move(out));
}

}  // namespace robust1d
