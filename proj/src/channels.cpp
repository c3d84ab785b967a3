#include "robust1d/channels.hpp"

#include <cmath>
#include <string>

#include "robust1d/error.hpp"

namespace robust1d {

ChannelConfig::ChannelConfig(double first_center, double spacing, std::size_t count)
    : first_center_(first_center), spacing_(spacing), count_(count) {
  if (!std::isfinite(first_center)) throw Error(ErrorKind::NonFinite, "first channel center is not finite");
  if (!std::isfinite(spacing) || !(spacing > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "channel spacing must be finite and > 0");
  }
  if (count < 3) throw Error(ErrorKind::InvalidArgument, "channel count must be >= 3");
}

ChannelConfig ChannelConfig::covering(double lo, double hi, double spacing) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw Error(ErrorKind::NonFinite, "grid bounds are not finite");
  if (!std::isfinite(spacing) || !(spacing > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "channel spacing must be finite and > 0");
  }
  if (hi < lo) throw Error(ErrorKind::InvalidArgument, "grid bounds are reversed");
  // Representable range is [xi_1 + s/2, xi_m - s/2]; a 1.5 s margin needs 2 s past the data.
  const double first = (std::floor(lo / spacing) - 2.0) * spacing;
  const double last = (std::ceil(hi / spacing) + 2.0) * spacing;
  const auto count = static_cast<std::size_t>(std::llround((last - first) / spacing)) + 1;
  return ChannelConfig(first, spacing, count);
}

double bspline_kernel(double u) noexcept {
  u = std::abs(u);
  if (u <= 0.5) return 0.75 - u * u;
  if (u <= 1.5) {
    const double t = 1.5 - u;
    return 0.5 * t * t;
  }
  return 0.0;
}

namespace {

void require_in_range(double x, const ChannelConfig& config) {
  if (!std::isfinite(x)) throw Error(ErrorKind::NonFinite, "channel input is not finite");
  if (x < config.range_min() || x > config.range_max()) {
    throw Error(ErrorKind::OutOfRange, "value " + std::to_string(x) + " outside channel range [" +
                                           std::to_string(config.range_min()) + ", " +
                                           std::to_string(config.range_max()) + "]");
  }
}

// Adds weight * encoding(x) into coeffs, touching only the (at most 3) supported channels.
void accumulate(double x, double weight, const ChannelConfig& config, std::vector<double>& coeffs) {
  const double s = config.spacing();
  const double pos = (x - config.first_center()) / s;
  const auto nearest = static_cast<long long>(std::floor(pos + 0.5));
  for (long long j = nearest - 1; j <= nearest + 1; ++j) {
    if (j < 0 || j >= static_cast<long long>(config.count())) continue;
    const auto idx = static_cast<std::size_t>(j);
    const double k = bspline_kernel((x - config.center(idx)) / s);
    if (k > 0.0) coeffs[idx] += weight * k;
  }
}

}  // namespace

ChannelVector channel_encode(double x, const ChannelConfig& config) {
  require_in_range(x, config);
  ChannelVector v{std::vector<double>(config.count(), 0.0)};
  accumulate(x, 1.0, config, v.coefficients);
  return v;
}

ChannelVector channel_average(SampleView samples, const ChannelConfig& config) {
  const auto x = samples.values();
  const auto w = samples.weights();
  for (double v : x) require_in_range(v, config);

  ChannelVector v{std::vector<double>(config.count(), 0.0)};
  const double total = samples.total_weight();
  for (std::size_t k = 0; k < x.size(); ++k) accumulate(x[k], w[k] / total, config, v.coefficients);
  return v;
}

double channel_decode(const ChannelVector& vec, const ChannelConfig& config) {
  const auto& c = vec.coefficients;
  if (c.size() != config.count()) {
    throw Error(ErrorKind::InvalidArgument, "channel vector length " + std::to_string(c.size()) +
                                                " does not match config count " + std::to_string(config.count()));
  }
  bool any_positive = false;
  for (double v : c) {
    if (!std::isfinite(v) || v < 0.0) throw Error(ErrorKind::InvalidArgument, "channel coefficients must be finite and >= 0");
    any_positive = any_positive || v > 0.0;
  }
  if (!any_positive) throw Error(ErrorKind::EmptyVector, "channel vector has no positive coefficient");

  std::size_t best_j = 1;
  double best_sum = -1.0;
  for (std::size_t j = 1; j + 1 < c.size(); ++j) {
    const double sum = c[j - 1] + c[j] + c[j + 1];
    if (sum > best_sum) {
      best_sum = sum;
      best_j = j;
    }
  }
  return config.center(best_j) + config.spacing() * (c[best_j + 1] - c[best_j - 1]) / best_sum;
}

}  // namespace robust1d
