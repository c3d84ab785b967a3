#pragma once

#include <cstddef>
#include <vector>

#include "robust1d/samples.hpp"

namespace robust1d {

/// Uniform grid of channel centers xi_j = first_center + (j - 1) * spacing, j = 1..count.
class ChannelConfig {
 public:
  /// Throws Error(InvalidArgument) unless spacing > 0 and count >= 3.
  ChannelConfig(double first_center, double spacing, std::size_t count);

  /// Smallest grid aligned to multiples of `spacing` whose representable
  /// range covers [lo - 1.5 spacing, hi + 1.5 spacing].
  static ChannelConfig covering(double lo, double hi, double spacing);

  double first_center() const noexcept { return first_center_; }
  double spacing() const noexcept { return spacing_; }
  std::size_t count() const noexcept { return count_; }

  /// Center of channel j, 0-based.
  double center(std::size_t j) const noexcept { return first_center_ + static_cast<double>(j) * spacing_; }

  /// Encodable interval [xi_2 - spacing/2, xi_{m-1} + spacing/2].
  double range_min() const noexcept { return center(1) - 0.5 * spacing_; }
  double range_max() const noexcept { return center(count_ - 2) + 0.5 * spacing_; }

 private:
  double first_center_;
  double spacing_;
  std::size_t count_;
};

struct ChannelVector {
  std::vector<double> coefficients;
};

/// Quadratic B-spline on a normalized offset u (support |u| < 3/2).
double bspline_kernel(double u) noexcept;

/// Coefficient j is K(|x - xi_j| / spacing). Throws Error(OutOfRange) outside the encodable range.
ChannelVector channel_encode(double x, const ChannelConfig& config);

/// Weight-normalized average of the sample encodings.
ChannelVector channel_average(SampleView samples, const ChannelConfig& config);

/// Local first moment around the strongest interior 3-channel group (ties go
/// to the lowest index). Throws Error(EmptyVector) if no coefficient is positive.
double channel_decode(const ChannelVector& vec, const ChannelConfig& config);

}  // namespace robust1d
