#include "robust1d/samples.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "robust1d/error.hpp"

namespace robust1d {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::BadWeight: return "BadWeight";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::EmptyVector: return "EmptyVector";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

Cutoff::Cutoff(double c) : c_(c) {
  if (!std::isfinite(c) || !(c > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "cutoff must be finite and > 0, got " + std::to_string(c));
  }
}

namespace {

void check_lengths(std::size_t n_values, std::size_t n_weights) {
  if (n_values == 0) throw Error(ErrorKind::EmptyInput, "sample set is empty");
  if (n_weights != n_values) {
    throw Error(ErrorKind::BadWeight, "weights length " + std::to_string(n_weights) +
                                          " does not match values length " + std::to_string(n_values));
  }
}

void check_value(double v, std::size_t i) {
  if (!std::isfinite(v)) {
    throw Error(ErrorKind::NonFinite, "sample " + std::to_string(i + 1) + " is not finite");
  }
}

// Returns the weight sum.
double check_weights(std::span<const double> weights) {
  double total = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const double w = weights[i];
    if (!std::isfinite(w)) {
      throw Error(ErrorKind::NonFinite, "weight " + std::to_string(i + 1) + " is not finite");
    }
    if (!(w > 0.0)) {
      throw Error(ErrorKind::BadWeight, "weight " + std::to_string(i + 1) + " must be > 0");
    }
    total += w;
  }
  if (!std::isfinite(total)) throw Error(ErrorKind::NonFinite, "total weight overflows");
  return total;
}

double validate_sorted(std::span<const double> values, std::span<const double> weights) {
  check_lengths(values.size(), weights.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    check_value(values[i], i);
    if (i > 0 && values[i] < values[i - 1]) {
      throw Error(ErrorKind::InvalidArgument, "values are not sorted ascending at index " + std::to_string(i + 1));
    }
  }
  return check_weights(weights);
}

}  // namespace

SampleView SampleView::from_sorted(std::span<const double> values, std::span<const double> weights) {
  const double total = validate_sorted(values, weights);
  return SampleView(values, weights, total);
}

SampleSet SampleSet::make(std::span<const double> values, std::optional<std::span<const double>> weights) {
  const std::size_t n = values.size();
  check_lengths(n, weights ? weights->size() : n);
  for (std::size_t i = 0; i < n; ++i) check_value(values[i], i);

  std::vector<double> w = weights ? std::vector<double>(weights->begin(), weights->end())
                                  : std::vector<double>(n, 1.0);
  check_weights(w);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return values[i] < values[j]; });

  std::vector<double> sorted_values(n);
  std::vector<double> sorted_weights(n);
  for (std::size_t k = 0; k < n; ++k) {
    sorted_values[k] = values[order[k]];
    sorted_weights[k] = w[order[k]];
  }
  // Summed in sorted order so that any input permutation gives the same bits.
  const double total = std::accumulate(sorted_weights.begin(), sorted_weights.end(), 0.0);
  return SampleSet(std::move(sorted_values), std::move(sorted_weights), total);
}

SampleSet SampleSet::from_sorted(std::vector<double> values, std::vector<double> weights) {
  const double total = validate_sorted(values, weights);
  return SampleSet(std::move(values), std::move(weights), total);
}

}  // namespace robust1d
