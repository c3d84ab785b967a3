#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>

#include "robust1d/samples.hpp"

namespace robust1d {

/// Running state of the candidate window [a, b] (1-based, inclusive).
///
/// When a <= b, s1, s2 and w_in hold the weighted sums of x, x^2 and w over
/// the window. After the window empties (a == b + 1) they are reset to zero.
struct WindowState {
  std::size_t a = 1;
  std::size_t b = 1;
  double s1 = 0.0;
  double s2 = 0.0;
  double w_in = 0.0;
  double w_total = 0.0;

  bool empty() const noexcept { return a > b; }

  /// Weight of the samples outside the window (the outlier count when all weights are 1).
  double w_out() const noexcept { return std::max(0.0, w_total - w_in); }

  double mean() const noexcept { return s1 / w_in; }

  /// Weighted squared deviation of the window from its mean, S2 - mu*S1, clamped at 0.
  double spread() const noexcept { return std::max(0.0, s2 - mean() * s1); }

  /// Upper bound on the robust error at mean(); exact for maximal and boundary windows.
  double bound(double cutoff_sq) const noexcept { return spread() + w_out() * cutoff_sq; }
};

/// Running sum with Neumaier compensation; removals are added as negatives.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  void reset() noexcept { sum_ = comp_ = 0.0; }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Enumerates a superset of all maximal and boundary windows in one
/// left-to-right pass, calling `visit(const WindowState&)` for each
/// non-empty candidate. Each step either extends b or drops a, so the
/// visitor runs at most 2n - 1 times and the sums are updated in O(1).
///
/// A window [a, b] is extended while |x_{b+1} - x_a| < 2c (strict). The
/// sums are compensated so that they stay within ~1e-12 relative of a fresh
/// recomputation even after many removals of large values.
template <class Visitor>
void sweep_windows(SampleView samples, Cutoff cutoff, Visitor&& visit) {
  const auto x = samples.values();
  const auto w = samples.weights();
  const std::size_t n = x.size();
  const double width = 2.0 * cutoff.value();

  WindowState s;
  s.w_total = samples.total_weight();
  CompensatedSum s1, s2, w_in;
  auto publish = [&] {
    s.s1 = s1.value();
    s.s2 = s2.value();
    s.w_in = w_in.value();
  };
  s1.add(w[0] * x[0]);
  s2.add(w[0] * x[0] * x[0]);
  w_in.add(w[0]);
  publish();

  while (s.a <= n) {
    if (s.a <= s.b) visit(std::as_const(s));

    if (s.b < n && std::abs(x[s.b] - x[s.a - 1]) < width) {
      ++s.b;
      const double xb = x[s.b - 1];
      const double wb = w[s.b - 1];
      s1.add(wb * xb);
      s2.add(wb * xb * xb);
      w_in.add(wb);
    } else {
      const double xa = x[s.a - 1];
      const double wa = w[s.a - 1];
      s1.add(-(wa * xa));
      s2.add(-(wa * xa * xa));
      w_in.add(-wa);
      ++s.a;
      if (s.a > s.b) {
        s1.reset();
        s2.reset();
        w_in.reset();
      }
    }
    publish();
  }
}

}  // namespace robust1d
