#include "robust1d/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "robust1d/error.hpp"
#include "robust1d/window_sweep.hpp"

namespace robust1d {

namespace {

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw Error(ErrorKind::NonFinite, std::string(what) + " is not finite");
}

}  // namespace

double robust_error(double x, SampleView samples, Cutoff cutoff) {
  require_finite(x, "evaluation point");
  const auto values = samples.values();
  const auto weights = samples.weights();
  const double c2 = cutoff.squared();
  double total = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    const double r = x - values[k];
    total += weights[k] * std::min(r * r, c2);
  }
  return total;
}

double window_mean(SampleView samples, std::size_t first, std::size_t last) {
  const auto x = samples.values();
  const auto w = samples.weights();
  const double pivot = x[first - 1];
  double sum_w = 0.0;
  double sum_wd = 0.0;
  for (std::size_t k = first - 1; k < last; ++k) {
    sum_w += w[k];
    sum_wd += w[k] * (x[k] - pivot);
  }
  return pivot + sum_wd / sum_w;
}

RobustMeanResult exact_robust_mean(SampleView samples, Cutoff cutoff) {
  const double c2 = cutoff.squared();
  double best = std::numeric_limits<double>::infinity();
  std::size_t best_a = 1;
  std::size_t best_b = 1;

  sweep_windows(samples, cutoff, [&](const WindowState& s) {
    const double e = s.bound(c2);
    if (e < best) {
      best = e;
      best_a = s.a;
      best_b = s.b;
    }
  });

  RobustMeanResult r;
  r.first = best_a;
  r.last = best_b;
  r.mean = window_mean(samples, best_a, best_b);
  r.error = robust_error(r.mean, samples, cutoff);
  return r;
}

RobustMeanResult brute_force_robust_mean(SampleView samples, Cutoff cutoff, std::size_t limit) {
  const std::size_t n = samples.size();
  if (n > limit) {
    throw Error(ErrorKind::TooLarge, "brute-force oracle limited to " + std::to_string(limit) +
                                         " samples, got " + std::to_string(n));
  }
  const auto x = samples.values();
  const auto w = samples.weights();

  RobustMeanResult best;
  best.error = std::numeric_limits<double>::infinity();
  for (std::size_t a = 1; a <= n; ++a) {
    const double pivot = x[a - 1];
    double sum_w = 0.0;
    double sum_wd = 0.0;
    for (std::size_t b = a; b <= n; ++b) {
      sum_w += w[b - 1];
      sum_wd += w[b - 1] * (x[b - 1] - pivot);
      const double mu = pivot + sum_wd / sum_w;
      const double e = robust_error(mu, samples, cutoff);
      if (e < best.error) best = {mu, e, a, b};
    }
  }
  return best;
}

std::vector<double> mean_shift_path(SampleView samples, double start, Cutoff cutoff,
                                    std::size_t max_iter, double tol) {
  require_finite(start, "mean-shift start");
  if (max_iter < 1) throw Error(ErrorKind::InvalidArgument, "max_iter must be >= 1");
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tol must be > 0");

  const auto x = samples.values();
  const auto w = samples.weights();
  const double c = cutoff.value();

  std::vector<double> path{start};
  double cur = start;
  for (std::size_t it = 0; it < max_iter; ++it) {
    const auto lo = std::lower_bound(x.begin(), x.end(), cur - c);
    const auto hi = std::upper_bound(lo, x.end(), cur + c);
    if (lo == hi) break;
    // Bounds above are computed with rounded cur +/- c; trim to the exact test.
    std::size_t first = static_cast<std::size_t>(lo - x.begin());
    std::size_t last = static_cast<std::size_t>(hi - x.begin());
    while (first < last && std::abs(x[first] - cur) > c) ++first;
    while (last > first && std::abs(x[last - 1] - cur) > c) --last;
    if (first == last) break;

    const double next = window_mean(samples, first + 1, last);
    path.push_back(next);
    const bool converged = std::abs(next - cur) < tol;
    cur = next;
    if (converged) break;
  }
  return path;
}

double mean_shift(SampleView samples, double start, Cutoff cutoff, std::size_t max_iter, double tol) {
  return mean_shift_path(samples, start, cutoff, max_iter, tol).back();
}

}  // namespace robust1d
