#pragma once

#include <cstddef>
#include <vector>

#include "robust1d/samples.hpp"

namespace robust1d {

struct RobustMeanResult {
  double mean = 0.0;
  /// Robust error evaluated at `mean`.
  double error = 0.0;
  /// Winning window of sorted samples, 1-based inclusive.
  std::size_t first = 1;
  std::size_t last = 1;
};

/// Sum of w_k * min((x - x_k)^2, c^2). Throws Error(NonFinite) if x is not finite.
double robust_error(double x, SampleView samples, Cutoff cutoff);

/// Weighted mean of sorted samples [first, last] (1-based), accumulated
/// relative to x_first so that a constant window returns x_first exactly.
double window_mean(SampleView samples, std::size_t first, std::size_t last);

/// Global minimizer of robust_error over the reals in a single linear sweep.
///
/// Among windows with equal bound the first one met by the sweep wins
/// (smallest a, then smallest b). The winner's mean is recomputed from its
/// samples and `error` is robust_error at that mean.
RobustMeanResult exact_robust_mean(SampleView samples, Cutoff cutoff);

inline constexpr std::size_t kDefaultOracleLimit = 1000;

/// O(n^3) reference: evaluates robust_error at the mean of every contiguous
/// window and keeps the first strict minimum. Throws Error(TooLarge) when
/// n exceeds `limit`.
RobustMeanResult brute_force_robust_mean(SampleView samples, Cutoff cutoff,
                                         std::size_t limit = kDefaultOracleLimit);

/// Flat-kernel mean shift: x <- weighted mean of samples with |x_k - x| <= c.
/// Stops when a step moves less than `tol` or after `max_iter` steps; returns
/// the current iterate if no sample lies within c.
double mean_shift(SampleView samples, double start, Cutoff cutoff, std::size_t max_iter, double tol);

/// Same iteration, returning every iterate starting with `start`.
std::vector<double> mean_shift_path(SampleView samples, double start, Cutoff cutoff,
                                    std::size_t max_iter, double tol);

}  // namespace robust1d
