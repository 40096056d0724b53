#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "wigstat/errors.hpp"
#include "wigstat/statistics.hpp"
#include "wigstat/torus.hpp"

using namespace wigstat;

TEST(Moments, GaussianSamplesHaveZeroExcess) {
  RngStream rng(1, 0);
  std::vector<double> x(1000000);
  for (double& v : x) v = rng.normal();
  const auto s = moments_and_excess({x});
  EXPECT_NEAR(s.excess, 0.0, 0.02);
  EXPECT_NEAR(s.mean, 0.0, 0.01);
  EXPECT_NEAR(s.variance, 1.0, 0.01);
  EXPECT_NEAR(s.negative_fraction, 0.5, 0.01);
  EXPECT_EQ(s.sample_count, x.size());
}

TEST(Moments, UniformSamplesHaveExcessMinusSixFifths) {
  RngStream rng(2, 0);
  std::vector<double> x(400000);
  for (double& v : x) v = 2.0 * rng.uniform() - 1.0;
  EXPECT_NEAR(moments_and_excess({x}).excess, -1.2, 0.02);
}

TEST(Moments, ConstantSamplesAreDegenerate) {
  const std::vector<double> x(10, 0.3);
  try {
    moments_and_excess({x});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerateDistribution);
  }
  const std::vector<double> one{1.0};
  EXPECT_THROW(moments_and_excess({one}), Error);
}

TEST(Moments, WeightsActLikeRepetition) {
  const std::vector<double> x{-1.0, 2.0, 5.0}, w{0.5, 0.25, 0.25};
  const std::vector<double> rep{-1.0, -1.0, 2.0, 5.0};
  const auto a = moments_and_excess({x, w}), b = moments_and_excess({rep});
  EXPECT_NEAR(a.mean, b.mean, 1e-15);
  EXPECT_NEAR(a.variance, b.variance, 1e-14);
  EXPECT_NEAR(a.excess, b.excess, 1e-13);
  EXPECT_NEAR(a.negative_fraction, 0.5, 1e-15);
}

TEST(Moments, RoundoffNegativesAreNotCounted) {
  const std::vector<double> x{-1e-13, 1.0, 2.0, -0.5};
  EXPECT_NEAR(moments_and_excess({x}).negative_fraction, 0.25, 1e-15);
}

TEST(Histogram, IsDensityNormalized) {
  RngStream rng(3, 0);
  std::vector<double> x(10000);
  for (double& v : x) v = rng.normal();
  const auto h = value_histogram({x}, 40);
  double total = 0;
  for (std::size_t i = 0; i < h.bins(); ++i) total += h.densities[i] * h.width(i);
  EXPECT_NEAR(total, 1.0, 1e-10);
  EXPECT_NEAR(h.edges.front(), moments_and_excess({x}).mean - 6.0, 1e-12);
}

TEST(Histogram, SingleRepeatedValueFillsOneBin) {
  const std::vector<double> x(5, 0.7);
  const auto h = value_histogram({x}, 10);
  int filled = 0;
  for (std::size_t i = 0; i < h.bins(); ++i) {
    if (h.densities[i] > 0) {
      ++filled;
      EXPECT_NEAR(h.densities[i], 1.0 / h.width(i), 1e-12);
    }
  }
  EXPECT_EQ(filled, 1);
}

TEST(Histogram, EmptyAndBadBinsRejected) {
  const std::vector<double> none;
  try {
    value_histogram({none}, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyInput);
  }
  const std::vector<double> x{1.0, 2.0};
  EXPECT_THROW(value_histogram({x}, 1), Error);
}

TEST(Histogram, RandomTorusStateMatchesShiftedGaussian) {
  RngStream rng(8, 0);
  const int N = 2187;
  const auto w = torus::wigner(random_state(N, rng));
  const auto h = value_histogram({w.values()}, 60);
  const auto g = gaussian_reference(1.0 / std::sqrt(N - 1.0));
  double worst = 0;
  for (std::size_t i = 0; i < h.bins(); ++i) worst = std::max(worst, std::abs(h.densities[i] - g(h.center(i))));
  EXPECT_LT(worst, 0.02);
}

TEST(Histogram, CoherentStateHasHeavyRightTail) {
  const auto w = torus::wigner(torus::coherent_state(2.0, 1.0, 243));
  const auto s = moments_and_excess({w.values()});
  EXPECT_GT(s.excess, 10.0);
  EXPECT_LT(s.negative_fraction, 0.2);
}

TEST(GaussianReference, ValuesAndNormalization) {
  EXPECT_NEAR(gaussian_reference(0.0)(0.0), 0.3989423, 5e-8);
  EXPECT_NEAR(gaussian_reference(0.1)(0.1), 0.3989423, 5e-8);
  const auto g = gaussian_reference(0.0);
  const int n = 16000;
  double integral = 0;
  for (int i = 0; i <= n; ++i) {
    const double x = -8.0 + 16.0 * i / n;
    integral += (i == 0 || i == n ? 0.5 : 1.0) * g(x);
  }
  EXPECT_NEAR(integral * 16.0 / n, 1.0, 1e-8);
  EXPECT_NEAR(gaussian_negative_fraction(0.0), 0.5, 1e-15);
}

TEST(Autocorrelation, ZeroLagIsMeanSquare) {
  oracle::Gen gen(4);
  for (int N : {31, 101}) {
    const auto c = autocorrelation_torus(torus::wigner(gen.state(N)));
    EXPECT_NEAR(c.at(0, 0), N / (N - 1.0), 1e-9);
  }
}

TEST(Autocorrelation, MatchesDirectSumAndIsSymmetric) {
  oracle::Gen gen(6);
  const int N = 15;
  const auto w = torus::wigner(gen.state(N));
  const auto c = autocorrelation_torus(w);
  for (int dn = -7; dn <= 7; ++dn)
    for (int dm = -7; dm <= 7; ++dm) {
      double direct = 0;
      for (int n = 0; n < N; ++n)
        for (int m = 0; m < N; ++m) direct += w.at(n, m) * w.at(n + dn, m + dm);
      ASSERT_NEAR(c.at(dn, dm), direct / (N * N), 1e-12);
      ASSERT_NEAR(c.at(dn, dm), c.at(-dn, -dm), 1e-13);
    }
}

TEST(Autocorrelation, PositionStateCorrelatesAlongItsLine) {
  const int N = 21;
  const auto c = autocorrelation_torus(torus::wigner(QuantumState::basis(N, 3)));
  for (int dn = -10; dn <= 10; ++dn)
    for (int dm = -10; dm <= 10; ++dm) ASSERT_NEAR(c.at(dn, dm), dn == 0 ? N / (N - 1.0) : 0.0, 1e-10);
}

TEST(Autocorrelation, OffZeroMeanIsFixedByPurity) {
  // sum over all lags equals (sum W)^2 / N^2 = N^2 / (N-1); removing the zero
  // lag leaves N / (N^2 - 1) per lag for every pure state
  oracle::Gen gen(10);
  const int N = 101;
  double acc = 0;
  const int states = 5;
  for (int s = 0; s < states; ++s) {
    const auto c = autocorrelation_torus(torus::wigner(gen.state(N)));
    double sum = 0;
    for (double v : c.grid) sum += v;
    acc += (sum - c.at(0, 0)) / (N * N - 1.0);
  }
  EXPECT_NEAR(acc / states, N / (N * N - 1.0), 1e-12);
  EXPECT_NEAR(acc / states, 0.01, 0.001);
}

TEST(Autocorrelation, RadialProfileCoversAllLags) {
  oracle::Gen gen(12);
  const auto c = autocorrelation_torus(torus::wigner(gen.state(21)));
  std::size_t total = 0;
  for (const auto& p : c.radial) total += p.count;
  EXPECT_EQ(total, 21u * 21u);
  EXPECT_EQ(c.radial.front().r, 0.0);
  EXPECT_NEAR(c.radial.front().value, 21 / 20.0, 1e-9);
}

TEST(Lyapunov, Values) {
  EXPECT_EQ(lyapunov_sawtooth(0.0), 0.0);
  EXPECT_NEAR(lyapunov_sawtooth(0.5), std::log(2.0), 1e-15);
  EXPECT_NEAR(lyapunov_sawtooth(2.0), std::log(2.0 + std::sqrt(3.0)), 1e-15);
  EXPECT_NEAR(lyapunov_sawtooth(2.0), 1.3169579, 5e-8);
  try {
    lyapunov_sawtooth(-0.1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOutOfDomain);
  }
}

TEST(KsDistance, SimpleCases) {
  const std::vector<double> a{1, 2, 3, 4}, b{1, 2, 3, 4}, c{10, 11};
  EXPECT_EQ(ks_distance(a, b), 0.0);
  EXPECT_EQ(ks_distance(a, c), 1.0);
  const std::vector<double> d{1, 2}, e{2, 3};
  EXPECT_NEAR(ks_distance(d, e), 0.5, 1e-15);
}

TEST(KsDistance, SameDistributionGivesSmallDistance) {
  RngStream rng(14, 0);
  std::vector<double> x(20000), y(20000);
  for (double& v : x) v = rng.normal();
  for (double& v : y) v = rng.normal();
  EXPECT_LT(ks_distance(x, y), 0.02);
}
