#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "robust1d/channels.hpp"
#include "robust1d/error.hpp"
#include "robust1d/estimator.hpp"

namespace robust1d {
namespace {

const ChannelConfig kUnitGrid(0.0, 1.0, 10);  // centers 0..9

TEST(BsplineKernel, KnownValues) {
  EXPECT_DOUBLE_EQ(bspline_kernel(0.0), 0.75);
  EXPECT_DOUBLE_EQ(bspline_kernel(0.5), 0.5);
  EXPECT_DOUBLE_EQ(bspline_kernel(-0.5), 0.5);
  EXPECT_DOUBLE_EQ(bspline_kernel(1.0), 0.125);
  EXPECT_DOUBLE_EQ(bspline_kernel(1.5), 0.0);
  EXPECT_DOUBLE_EQ(bspline_kernel(2.0), 0.0);
}

TEST(ChannelConfig, RangeAndValidation) {
  EXPECT_DOUBLE_EQ(kUnitGrid.range_min(), 0.5);
  EXPECT_DOUBLE_EQ(kUnitGrid.range_max(), 8.5);
  EXPECT_THROW(ChannelConfig(0.0, 0.0, 5), Error);
  EXPECT_THROW(ChannelConfig(0.0, 1.0, 2), Error);

  const auto g = ChannelConfig::covering(2.5, 10.0, 1.0);
  EXPECT_LE(g.range_min(), 2.5 - 1.5);
  EXPECT_GE(g.range_max(), 10.0 + 1.5);
  EXPECT_EQ(g.first_center(), 0.0);
}

TEST(ChannelEncode, AtCenter) {
  const auto v = channel_encode(4.0, kUnitGrid).coefficients;
  EXPECT_DOUBLE_EQ(v[4], 0.75);
  EXPECT_DOUBLE_EQ(v[3], 0.125);
  EXPECT_DOUBLE_EQ(v[5], 0.125);
  EXPECT_DOUBLE_EQ(std::accumulate(v.begin(), v.end(), 0.0), 1.0);
}

TEST(ChannelEncode, AtMidpoint) {
  const auto v = channel_encode(4.5, kUnitGrid).coefficients;
  for (std::size_t j = 0; j < v.size(); ++j) EXPECT_DOUBLE_EQ(v[j], (j == 4 || j == 5) ? 0.5 : 0.0) << j;
}

TEST(ChannelEncode, QuarterOffset) {
  const auto v = channel_encode(4.25, kUnitGrid).coefficients;
  EXPECT_DOUBLE_EQ(v[3], 0.03125);
  EXPECT_DOUBLE_EQ(v[4], 0.6875);
  EXPECT_DOUBLE_EQ(v[5], 0.28125);
  EXPECT_EQ(std::count_if(v.begin(), v.end(), [](double c) { return c != 0.0; }), 3);
}

TEST(ChannelEncode, OutOfRange) {
  try {
    channel_encode(0.49, kUnitGrid);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OutOfRange);
  }
  EXPECT_THROW(channel_encode(8.51, kUnitGrid), Error);
  EXPECT_NO_THROW(channel_encode(0.5, kUnitGrid));
  EXPECT_NO_THROW(channel_encode(8.5, kUnitGrid));
}

TEST(ChannelAverage, SingleAndRepeatedSample) {
  const auto one = channel_average(make_sample_set(std::vector<double>{4.25}), kUnitGrid);
  EXPECT_EQ(one.coefficients, channel_encode(4.25, kUnitGrid).coefficients);
  const auto two = channel_average(make_sample_set(std::vector<double>{4.25, 4.25}), kUnitGrid);
  for (std::size_t j = 0; j < two.coefficients.size(); ++j) {
    EXPECT_DOUBLE_EQ(two.coefficients[j], one.coefficients[j]);
  }
}

TEST(ChannelAverage, TwoNeighbouringCenters) {
  const auto v = channel_average(make_sample_set(std::vector<double>{4.0, 5.0}), kUnitGrid).coefficients;
  EXPECT_DOUBLE_EQ(v[3], 0.0625);
  EXPECT_DOUBLE_EQ(v[4], 0.4375);
  EXPECT_DOUBLE_EQ(v[5], 0.4375);
  EXPECT_DOUBLE_EQ(v[6], 0.0625);
}

TEST(ChannelAverage, UsesNormalizedWeights) {
  const std::vector<double> x{4.0, 5.0};
  const std::vector<double> w{3.0, 1.0};
  const auto v = channel_average(make_sample_set(x, std::span<const double>(w)), kUnitGrid).coefficients;
  EXPECT_DOUBLE_EQ(v[4], 0.75 * 0.75 + 0.25 * 0.125);
  EXPECT_THROW(channel_average(make_sample_set(std::vector<double>{4.0, 9.0}), kUnitGrid), Error);
}

TEST(ChannelDecode, RoundTripAndSymmetric) {
  EXPECT_NEAR(channel_decode(channel_encode(4.25, kUnitGrid), kUnitGrid), 4.25, 1e-12);
  ChannelVector sym{std::vector<double>(10, 0.0)};
  sym.coefficients[3] = 0.125;
  sym.coefficients[4] = 0.75;
  sym.coefficients[5] = 0.125;
  EXPECT_DOUBLE_EQ(channel_decode(sym, kUnitGrid), 4.0);
}

TEST(ChannelDecode, SuppressesFarOutlier) {
  const ChannelConfig grid = ChannelConfig::covering(0.0, 7.0, 1.0);
  const auto s = make_sample_set(std::vector<double>{0.0, 0.1, 0.2, 7.0});
  const double m = channel_decode(channel_average(s, grid), grid);
  EXPECT_NEAR(m, 0.1, 0.15);
  EXPECT_GT(std::abs(m - 1.825), 1.0);
}

TEST(ChannelDecode, Errors) {
  try {
    channel_decode(ChannelVector{std::vector<double>(10, 0.0)}, kUnitGrid);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyVector);
  }
  EXPECT_THROW(channel_decode(ChannelVector{std::vector<double>(4, 0.1)}, kUnitGrid), Error);
}

TEST(ChannelProperties, RoundTripPartitionLocality) {
  std::mt19937_64 rng(31);
  const ChannelConfig grid(-3.0, 0.7, 15);
  std::uniform_real_distribution<double> dist(grid.range_min(), grid.range_max());
  for (int i = 0; i < 1000; ++i) {
    const double x = dist(rng);
    const auto v = channel_encode(x, grid).coefficients;
    EXPECT_NEAR(std::accumulate(v.begin(), v.end(), 0.0), 1.0, 1e-12);
    EXPECT_LE(std::count_if(v.begin(), v.end(), [](double c) { return c != 0.0; }), 3);
    for (double c : v) EXPECT_GE(c, 0.0);
    EXPECT_NEAR(channel_decode(ChannelVector{v}, grid), x, 1e-12);
  }
}

TEST(ChannelProperties, ShiftCovariance) {
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> pos(0.5, 8.5);
  std::uniform_real_distribution<double> shift(-50.0, 50.0);
  for (int i = 0; i < 500; ++i) {
    const double x = pos(rng);
    const double t = shift(rng);
    const auto a = channel_encode(x, kUnitGrid).coefficients;
    const auto b = channel_encode(x + t, ChannelConfig(t, 1.0, 10)).coefficients;
    for (std::size_t j = 0; j < a.size(); ++j) EXPECT_NEAR(a[j], b[j], 1e-12);
  }
  // Dyadic shifts keep every offset exact.
  const auto a = channel_encode(4.25, kUnitGrid).coefficients;
  EXPECT_EQ(a, channel_encode(4.25 + 8.0, ChannelConfig(8.0, 1.0, 10)).coefficients);
}

TEST(ChannelProperties, GridEffectExistsWhereExactMethodHasNone) {
  // Half-spread d = 0.8 with c = 1: the pair scores 2 d^2 = 1.28 while either
  // sample alone scores c^2 = 1, so the exact method ties between the two
  // singletons and keeps the lower one. Its displacement is the constant -d,
  // independent of the grid position; the channel decoder's is not.
  const ChannelConfig grid(-3.0, 1.0, 8);
  const double d = 0.8;
  double channel_min = 1.0, channel_max = -1.0;
  for (int i = 0; i < 20; ++i) {
    const double x0 = 0.05 * i;
    const auto pair = make_sample_set(std::vector<double>{x0 - d, x0 + d});
    const double shift = channel_decode(channel_average(pair, grid), grid) - x0;
    channel_min = std::min(channel_min, shift);
    channel_max = std::max(channel_max, shift);

    const auto r = exact_robust_mean(pair, Cutoff(1.0));
    EXPECT_EQ(robust_error(x0 - d, pair, Cutoff(1.0)), robust_error(x0 + d, pair, Cutoff(1.0)));
    EXPECT_NEAR(r.mean - x0, -d, 1e-12);
  }
  EXPECT_GT(channel_max - channel_min, 1e-6);
}

}  // namespace
}  // namespace robust1d
