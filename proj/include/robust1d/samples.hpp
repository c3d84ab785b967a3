#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace robust1d {

/// Truncation scale of the quadratic error norm, rho(r) = min(r^2, c^2).
class Cutoff {
 public:
  /// Throws Error(InvalidArgument) unless c is finite and positive.
  explicit Cutoff(double c);

  double value() const noexcept { return c_; }
  double squared() const noexcept { return c_ * c_; }

 private:
  double c_;
};

/// Non-owning view of samples sorted ascending by value, with positive weights.
///
/// Every view handed out by this library has been validated: values are
/// finite and non-decreasing, weights are finite and positive, both spans
/// have the same non-zero length.
class SampleView {
 public:
  /// Validates already-sorted data in O(n) and throws Error on violation.
  static SampleView from_sorted(std::span<const double> values,
                                std::span<const double> weights);

  std::span<const double> values() const noexcept { return values_; }
  std::span<const double> weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return values_.size(); }
  double total_weight() const noexcept { return total_weight_; }

 private:
  friend class SampleSet;
  SampleView(std::span<const double> values, std::span<const double> weights,
             double total_weight) noexcept
      : values_(values), weights_(weights), total_weight_(total_weight) {}

  std::span<const double> values_;
  std::span<const double> weights_;
  double total_weight_ = 0.0;
};

/// Owning, validated, value-sorted set of weighted 1D samples.
class SampleSet {
 public:
  /// Sorts value/weight pairs by value (stable). Throws Error on empty
  /// input, non-finite entries, non-positive weights, or length mismatch.
  static SampleSet make(std::span<const double> values,
                        std::optional<std::span<const double>> weights = std::nullopt);

  /// Takes ownership of data that is already sorted; validates in O(n).
  static SampleSet from_sorted(std::vector<double> values, std::vector<double> weights);

  std::span<const double> values() const noexcept { return values_; }
  std::span<const double> weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return values_.size(); }
  double total_weight() const noexcept { return total_weight_; }

  SampleView view() const noexcept { return {values_, weights_, total_weight_}; }
  operator SampleView() const noexcept { return view(); }  // NOLINT(google-explicit-constructor)

 private:
  SampleSet(std::vector<double> values, std::vector<double> weights, double total_weight)
      : values_(std::move(values)), weights_(std::move(weights)), total_weight_(total_weight) {}

  std::vector<double> values_;
  std::vector<double> weights_;
  double total_weight_ = 0.0;
};

inline SampleSet make_sample_set(std::span<const double> values,
                                 std::optional<std::span<const double>> weights = std::nullopt) {
  return SampleSet::make(values, weights);
}

}  // namespace robust1d
