#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "robust1d/channels.hpp"
#include "robust1d/samples.hpp"

namespace robust1d {

/// start, start + step, ... up to stop (inclusive within rounding).
std::vector<double> linear_grid(double start, double stop, double step);

// ---------------------------------------------------------------------------
// Outlier influence: a fixed inlier cluster plus one outlier at a swept position.

struct OutlierSweepConfig {
  SampleSet inliers;
  std::vector<double> outlier_positions;
  Cutoff cutoff;
  ChannelConfig channels;

  /// Inliers {2.5, 3.0, 3.5}, positions 0..10 step 0.05, c = 1, and a
  /// channel grid with spacing c covering every swept set.
  static OutlierSweepConfig defaults();

  /// Same cluster with custom positions/cutoff; the channel grid is derived.
  static OutlierSweepConfig with_positions(std::vector<double> positions, Cutoff cutoff);

  void validate() const;
};

struct OutlierSweepRow {
  double outlier_position = 0.0;
  double exact_mean = 0.0;
  double channel_mean = 0.0;
};

std::vector<OutlierSweepRow> outlier_influence_sweep(const OutlierSweepConfig& config);

// ---------------------------------------------------------------------------
// Grid effect: a symmetric pair x0 -/+ d with x0 moved between two channel centers.

struct GridSweepConfig {
  double d = 0.6;
  /// Position of x0 past the anchor center, in units of the channel spacing.
  std::vector<double> x0_offsets;
  ChannelConfig channels;
  /// 0-based index of the interior channel that x0 is measured from.
  std::size_t anchor = 0;

  /// d = 0.6, offsets 0..0.95 step 0.05, spacing 1.
  static GridSweepConfig defaults();

  /// Builds a unit-spacing grid wide enough for every pair.
  static GridSweepConfig make(double d, std::vector<double> offsets, double spacing = 1.0);

  void validate() const;
};

struct GridSweepRow {
  double x0_offset = 0.0;
  double channel_displacement = 0.0;
  double exact_displacement = 0.0;
};

/// The exact method uses cutoff c = channel spacing.
std::vector<GridSweepRow> grid_effect_sweep(const GridSweepConfig& config);

// ---------------------------------------------------------------------------
// Runtime scaling of the sweep.

struct BenchmarkRow {
  std::size_t n = 0;
  double median_seconds = 0.0;
};

/// Sorted uniform [0, 1) samples with unit weights from a seeded generator.
SampleSet benchmark_samples(std::size_t n, std::uint64_t seed);

/// Cutoff used by linearity_benchmark.
inline constexpr double kBenchmarkCutoff = 0.01;

/// Times exact_robust_mean on pre-sorted inputs (sorting excluded) and
/// reports the median of `repetitions` per-scan times for each size. Each
/// timed sample averages a batch of scans sized to similar total work. Throws
/// Error(InvalidArgument) unless sizes are non-empty, positive and
/// increasing, and repetitions >= 5.
std::vector<BenchmarkRow> linearity_benchmark(std::span<const std::size_t> sizes, std::size_t repetitions,
                                              std::uint64_t seed);

// CSV output: header row, comma separated, '\n' line ends, 12 significant digits.
void write_csv(std::ostream& os, std::span<const OutlierSweepRow> rows);
void write_csv(std::ostream& os, std::span<const GridSweepRow> rows);
void write_csv(std::ostream& os, std::span<const BenchmarkRow> rows);

}  // namespace robust1d
