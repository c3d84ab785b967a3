#pragma once

// Random instance generators and reference computations shared by the unit
// and acceptance suites. The oracles here never call into the sweep.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace robust1d::testing {

struct Instance {
  std::vector<double> values;
  std::vector<double> weights;
  double cutoff = 1.0;
};

class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  std::size_t uniform_count(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  std::mt19937_64& engine() { return rng_; }

  /// n in [n_lo, n_hi], values in [-5, 5], c in (0, 5], weights in (0, 3].
  Instance next(std::size_t n_lo = 1, std::size_t n_hi = 12, bool weighted = true) {
    Instance inst;
    const std::size_t n = uniform_count(n_lo, n_hi);
    inst.values.resize(n);
    inst.weights.resize(n);
    for (auto& v : inst.values) v = uniform(-5.0, 5.0);
    for (auto& w : inst.weights) w = weighted ? positive(3.0) : 1.0;
    inst.cutoff = positive(5.0);
    return inst;
  }

  /// Uniform on (0, hi].
  double positive(double hi) {
    double v = 0.0;
    while (v <= 0.0) v = hi - uniform(0.0, hi);
    return v;
  }

 private:
  std::mt19937_64 rng_;
};

/// Direct summation of w_k * min((x - x_k)^2, c^2).
inline double naive_error(double x, const std::vector<double>& values, const std::vector<double>& weights,
                          double c) {
  double e = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k) e += weights[k] * std::min((x - values[k]) * (x - values[k]), c * c);
  return e;
}

struct Minimum {
  double x = 0.0;
  double error = std::numeric_limits<double>::infinity();
};

/// Global minimum of the truncated-quadratic error by piecewise analysis:
/// between consecutive breakpoints x_k -/+ c the inlier set is fixed and the
/// error is a quadratic minimized at the inliers' weighted mean (clipped to
/// the piece). Candidates are all breakpoints plus every clipped stationary point.
inline Minimum piecewise_minimum(const std::vector<double>& values, const std::vector<double>& weights, double c) {
  std::vector<double> breaks;
  for (double v : values) {
    breaks.push_back(v - c);
    breaks.push_back(v + c);
  }
  std::sort(breaks.begin(), breaks.end());

  std::vector<double> candidates = breaks;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double lo = breaks[i];
    const double hi = breaks[i + 1];
    if (!(hi > lo)) continue;
    const double mid = 0.5 * (lo + hi);
    double sw = 0.0;
    double swx = 0.0;
    for (std::size_t k = 0; k < values.size(); ++k) {
      if (std::abs(values[k] - mid) < c) {
        sw += weights[k];
        swx += weights[k] * values[k];
      }
    }
    if (sw > 0.0) candidates.push_back(std::clamp(swx / sw, lo, hi));
  }

  Minimum best;
  for (double x : candidates) {
    const double e = naive_error(x, values, weights, c);
    if (e < best.error) best = {x, e};
  }
  return best;
}

inline bool rel_close(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

/// Relative comparison with the scale floored at 1.
inline bool close_floor1(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace robust1d::testing

#include "robust1d/smoothing.hpp"

namespace robust1d::testing {

/// Vertical step (left half `lo`, right half `hi`) plus uniform noise in
/// [-amplitude, amplitude] from a fixed seed.
inline GrayImage noisy_step(std::size_t width, std::size_t height, double lo, double hi, double amplitude,
                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> noise(-amplitude, amplitude);
  std::vector<double> px(width * height);
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      const double base = x < width / 2 ? lo : hi;
      px[y * width + x] = amplitude > 0.0 ? std::clamp(base + noise(rng), 0.0, 1.0) : base;
    }
  }
  return GrayImage(width, height, std::move(px));
}

struct StepStats {
  double flat_std = 0.0;  // mean of the two flat-region standard deviations
  double edge_jump = 0.0; // mean over rows of right-of-edge minus left-of-edge pixel
};

/// Flat regions exclude every column whose radius-r window reaches the edge.
inline StepStats step_stats(const GrayImage& img, int radius) {
  const std::size_t w = img.width();
  const std::size_t h = img.height();
  const std::size_t mid = w / 2;
  auto region_std = [&](std::size_t x0, std::size_t x1) {
    double sum = 0.0, sum2 = 0.0;
    std::size_t n = 0;
    for (std::size_t y = 0; y < h; ++y) {
      for (std::size_t x = x0; x < x1; ++x) {
        sum += img.at(x, y);
        sum2 += img.at(x, y) * img.at(x, y);
        ++n;
      }
    }
    const double mean = sum / static_cast<double>(n);
    return std::sqrt(std::max(0.0, sum2 / static_cast<double>(n) - mean * mean));
  };
  const auto r = static_cast<std::size_t>(radius);
  StepStats st;
  st.flat_std = 0.5 * (region_std(0, mid - r) + region_std(mid + r, w));
  double jump = 0.0;
  for (std::size_t y = 0; y < h; ++y) jump += img.at(mid, y) - img.at(mid - 1, y);
  st.edge_jump = jump / static_cast<double>(h);
  return st;
}

}  // namespace robust1d::testing
