#include "robust1d/experiments.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <ostream>
#include <random>
#include <string>

#include "robust1d/error.hpp"
#include "robust1d/estimator.hpp"
#include "robust1d/format.hpp"

namespace robust1d {

std::vector<double> linear_grid(double start, double stop, double step) {
  if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step)) {
    throw Error(ErrorKind::NonFinite, "grid parameters must be finite");
  }
  if (!(step > 0.0)) throw Error(ErrorKind::InvalidArgument, "grid step must be > 0");
  if (stop < start) throw Error(ErrorKind::InvalidArgument, "grid stop is below start");
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) grid[i] = start + static_cast<double>(i) * step;
  return grid;
}

// --- outlier influence -----------------------------------------------------

namespace {

constexpr std::array<double, 3> kInlierCluster{2.5, 3.0, 3.5};

SampleSet with_extra_sample(const SampleSet& base, double x) {
  std::vector<double> values(base.values().begin(), base.values().end());
  std::vector<double> weights(base.weights().begin(), base.weights().end());
  values.push_back(x);
  weights.push_back(1.0);
  return SampleSet::make(values, std::span<const double>(weights));
}

}  // namespace

OutlierSweepConfig OutlierSweepConfig::with_positions(std::vector<double> positions, Cutoff cutoff) {
  SampleSet inliers = SampleSet::make(kInlierCluster);
  if (positions.empty()) throw Error(ErrorKind::InvalidArgument, "outlier positions are empty");
  const auto [pmin, pmax] = std::minmax_element(positions.begin(), positions.end());
  const double lo = std::min(*pmin, inliers.values().front());
  const double hi = std::max(*pmax, inliers.values().back());
  ChannelConfig channels = ChannelConfig::covering(lo, hi, cutoff.value());
  return {std::move(inliers), std::move(positions), cutoff, channels};
}

OutlierSweepConfig OutlierSweepConfig::defaults() {
  return with_positions(linear_grid(0.0, 10.0, 0.05), Cutoff(1.0));
}

void OutlierSweepConfig::validate() const {
  if (outlier_positions.empty()) throw Error(ErrorKind::InvalidArgument, "outlier positions are empty");
  for (std::size_t i = 0; i < outlier_positions.size(); ++i) {
    if (!std::isfinite(outlier_positions[i])) throw Error(ErrorKind::NonFinite, "outlier position is not finite");
    if (i > 0 && !(outlier_positions[i] > outlier_positions[i - 1])) {
      throw Error(ErrorKind::InvalidArgument, "outlier positions must be strictly increasing");
    }
  }
}

std::vector<OutlierSweepRow> outlier_influence_sweep(const OutlierSweepConfig& config) {
  config.validate();
  std::vector<OutlierSweepRow> rows;
  rows.reserve(config.outlier_positions.size());
  for (double p : config.outlier_positions) {
    const SampleSet samples = with_extra_sample(config.inliers, p);
    OutlierSweepRow row;
    row.outlier_position = p;
    row.exact_mean = exact_robust_mean(samples, config.cutoff).mean;
    row.channel_mean = channel_decode(channel_average(samples, config.channels), config.channels);
    rows.push_back(row);
  }
  return rows;
}

// --- grid effect -------------------------------------------------------------

GridSweepConfig GridSweepConfig::make(double d, std::vector<double> offsets, double spacing) {
  if (!std::isfinite(d) || !(d > 0.0)) throw Error(ErrorKind::InvalidArgument, "d must be finite and > 0");
  // Pairs span [-d, spacing + d] around an anchor center at 0.
  ChannelConfig channels = ChannelConfig::covering(-d, spacing + d, spacing);
  const auto anchor = static_cast<std::size_t>(std::llround(-channels.first_center() / spacing));
  GridSweepConfig cfg{d, std::move(offsets), channels, anchor};
  cfg.validate();
  return cfg;
}

GridSweepConfig GridSweepConfig::defaults() { return make(0.6, linear_grid(0.0, 0.95, 0.05)); }

void GridSweepConfig::validate() const {
  if (!std::isfinite(d) || !(d > 0.0)) throw Error(ErrorKind::InvalidArgument, "d must be finite and > 0");
  if (x0_offsets.empty()) throw Error(ErrorKind::InvalidArgument, "x0 offsets are empty");
  for (double o : x0_offsets) {
    if (!(o >= 0.0 && o < 1.0)) throw Error(ErrorKind::InvalidArgument, "x0 offsets must lie in [0, 1)");
  }
  if (anchor == 0 || anchor + 1 >= channels.count()) {
    throw Error(ErrorKind::InvalidArgument, "anchor channel must be interior");
  }
}

std::vector<GridSweepRow> grid_effect_sweep(const GridSweepConfig& config) {
  config.validate();
  const double spacing = config.channels.spacing();
  const Cutoff cutoff(spacing);
  std::vector<GridSweepRow> rows;
  rows.reserve(config.x0_offsets.size());
  for (double o : config.x0_offsets) {
    const double x0 = config.channels.center(config.anchor) + o * spacing;
    const std::array<double, 2> pair{x0 - config.d, x0 + config.d};
    const SampleSet samples = SampleSet::make(pair);
    GridSweepRow row;
    row.x0_offset = o;
    row.channel_displacement = channel_decode(channel_average(samples, config.channels), config.channels) - x0;
    row.exact_displacement = exact_robust_mean(samples, cutoff).mean - x0;
    rows.push_back(row);
  }
  return rows;
}

// --- linearity benchmark ---------------------------------------------------

SampleSet benchmark_samples(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw Error(ErrorKind::EmptyInput, "benchmark size must be >= 1");
  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * n));
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  std::vector<double> values(n);
  for (auto& v : values) v = dist(rng);
  std::sort(values.begin(), values.end());
  return SampleSet::from_sorted(std::move(values), std::vector<double>(n, 1.0));
}

std::vector<BenchmarkRow> linearity_benchmark(std::span<const std::size_t> sizes, std::size_t repetitions,
                                              std::uint64_t seed) {
  if (sizes.empty()) throw Error(ErrorKind::InvalidArgument, "benchmark sizes are empty");
  if (repetitions < 5) throw Error(ErrorKind::InvalidArgument, "benchmark needs >= 5 repetitions");
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] == 0 || (i > 0 && sizes[i] <= sizes[i - 1])) {
      throw Error(ErrorKind::InvalidArgument, "benchmark sizes must be positive and increasing");
    }
  }

  const Cutoff cutoff(kBenchmarkCutoff);
  std::vector<SampleSet> inputs;
  std::vector<std::size_t> batch;  // scans per timed sample, ~kSamplesPerTiming samples of work
  constexpr std::size_t kSamplesPerTiming = 2'000'000;
  inputs.reserve(sizes.size());
  for (std::size_t n : sizes) {
    inputs.push_back(benchmark_samples(n, seed));
    batch.push_back(std::max<std::size_t>(1, kSamplesPerTiming / n));
  }

  volatile double sink = 0.0;
  for (const auto& in : inputs) sink = sink + exact_robust_mean(in, cutoff).mean;  // warm-up

  // Sizes are interleaved within each repetition so that slow drift of the
  // machine affects every size alike.
  std::vector<std::vector<double>> times(sizes.size(), std::vector<double>(repetitions));
  for (std::size_t rep = 0; rep < repetitions; ++rep) {
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      const auto start = std::chrono::steady_clock::now();
      for (std::size_t k = 0; k < batch[i]; ++k) sink = sink + exact_robust_mean(inputs[i], cutoff).mean;
      const auto stop = std::chrono::steady_clock::now();
      times[i][rep] = std::chrono::duration<double>(stop - start).count() / static_cast<double>(batch[i]);
    }
  }

  std::vector<BenchmarkRow> rows;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    auto& t = times[i];
    const auto mid = t.begin() + static_cast<std::ptrdiff_t>(t.size() / 2);
    std::nth_element(t.begin(), mid, t.end());
    rows.push_back({sizes[i], *mid});
  }
  return rows;
}

// --- CSV -----------------------------------------------------------------------

void write_csv(std::ostream& os, std::span<const OutlierSweepRow> rows) {
  os << "outlier_position,exact_mean,channel_mean\n";
  for (const auto& r : rows) {
    os << format_number(r.outlier_position) << ',' << format_number(r.exact_mean) << ','
       << format_number(r.channel_mean) << '\n';
  }
}

void write_csv(std::ostream& os, std::span<const GridSweepRow> rows) {
  os << "x0_offset,channel_displacement,exact_displacement\n";
  for (const auto& r : rows) {
    os << format_number(r.x0_offset) << ',' << format_number(r.channel_displacement) << ','
       << format_number(r.exact_displacement) << '\n';
  }
}

void write_csv(std::ostream& os, std::span<const BenchmarkRow> rows) {
  os << "n,median_scan_time\n";
  for (const auto& r : rows) os << r.n << ',' << format_number(r.median_seconds) << '\n';
}

}  // namespace robust1d
