#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "wigstat/errors.hpp"
#include "wigstat/half_integer.hpp"
#include "wigstat/state.hpp"

using namespace wigstat;

TEST(RandomState, RejectsDimensionOne) {
  RngStream rng(1, 0);
  try {
    random_state(1, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidDimension);
  }
}

TEST(RandomState, IsNormalized) {
  oracle::Gen gen(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int dim = gen.uniform_int(2, 400);
    EXPECT_NEAR(gen.state(dim).norm(), 1.0, 1e-12) << "dim " << dim;
  }
}

TEST(RandomState, MeanSquaredAmplitudeIsOneOverDim) {
  RngStream rng(2024, 0);
  const int dim = 101, samples = 10000;
  double sum = 0.0, sum2 = 0.0;
  for (int s = 0; s < samples; ++s) {
    const double p = std::norm(random_state(dim, rng)[0]);
    sum += p;
    sum2 += p * p;
  }
  const double mean = sum / samples;
  const double se = std::sqrt((sum2 / samples - mean * mean) / samples);
  EXPECT_NEAR(mean, 1.0 / dim, 3.0 * se);
}

TEST(RandomState, DistinctAmplitudesAreUncorrelated) {
  RngStream rng(99, 3);
  const int dim = 21, samples = 10000;
  const int l = 4, lp = 13;
  double re = 0, im = 0, re2 = 0, im2 = 0;
  for (int s = 0; s < samples; ++s) {
    const auto psi = random_state(dim, rng);
    const Complex z = psi[l] * std::conj(psi[lp]);
    re += z.real();
    im += z.imag();
    re2 += z.real() * z.real();
    im2 += z.imag() * z.imag();
  }
  const double mr = re / samples, mi = im / samples;
  EXPECT_NEAR(mr, 0.0, 3.0 * std::sqrt((re2 / samples - mr * mr) / samples));
  EXPECT_NEAR(mi, 0.0, 3.0 * std::sqrt((im2 / samples - mi * mi) / samples));
}

TEST(RngStream, EqualSeedAndStreamReproduceBitwise) {
  RngStream a(7, 5), b(7, 5), c(7, 6);
  const auto x = random_state(64, a), y = random_state(64, b), z = random_state(64, c);
  for (int i = 0; i < 64; ++i) {
    EXPECT_EQ(x[i], y[i]);
  }
  EXPECT_NE(x[0], z[0]);
}

TEST(QuantumState, NormalizesAndRejectsZero) {
  Eigen::VectorXcd v(3);
  v << 3.0, Complex(0, 4), 0.0;
  const auto psi = QuantumState::normalized(v);
  EXPECT_NEAR(psi.norm(), 1.0, 1e-15);
  EXPECT_NEAR(psi[0].real(), 0.6, 1e-15);
  EXPECT_THROW(QuantumState::normalized(Eigen::VectorXcd::Zero(3)), Error);
}

TEST(QuantumState, UnitaryImageMustAlreadyBeNormalized) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
  v[1] = 1.0 + 1e-12;
  EXPECT_NO_THROW(QuantumState::from_unitary_image(v));
  v[1] = 1.01;
  EXPECT_THROW(QuantumState::from_unitary_image(v), Error);
}

TEST(QuantumState, BasisIndexChecked) {
  EXPECT_EQ(QuantumState::basis(5, 4)[4], Complex(1.0));
  try {
    QuantumState::basis(5, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOutOfRange);
  }
}

TEST(HalfInteger, ArithmeticIsExact) {
  const HalfInteger h = HalfInteger::from_twice(3);
  EXPECT_DOUBLE_EQ(h.value(), 1.5);
  EXPECT_FALSE(h.is_integer());
  EXPECT_EQ(h + h, HalfInteger(3));
  EXPECT_EQ(-h + HalfInteger(2), HalfInteger::from_twice(1));
  EXPECT_EQ(abs(-h), h);
  EXPECT_LT(HalfInteger(1), h);
  EXPECT_EQ(spin_dim(h), 4);
}
