#include <gtest/gtest.h>

#include <numbers>

#include "modnorm/numerical_range.hpp"
#include "oracles.hpp"

using namespace modnorm;

namespace {

const ToleranceConfig kCfg = default_tolerances();

ComplexMatrix nilpotent() {
  ComplexMatrix n = ComplexMatrix::Zero(2, 2);
  n(0, 1) = 1.0;
  return n;
}

ComplexMatrix diag01() {
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(1, 1) = 1.0;
  return d;
}

}  // namespace

TEST(SupportFunction, DiagonalExamples) {
  const auto [v0, e0] = support_function(diag01(), 0.0);
  EXPECT_NEAR(v0, 1.0, 1e-15);
  EXPECT_NEAR(std::abs(e0(1)), 1.0, 1e-12);
  const auto [vpi, epi] = support_function(diag01(), std::numbers::pi);
  EXPECT_NEAR(vpi, 0.0, 1e-15);
  EXPECT_NEAR(std::abs(epi(0)), 1.0, 1e-12);
}

TEST(SupportFunction, NilpotentDiskMatchesSampling) {
  // W of the 2x2 nilpotent is the disk of radius 1/2: its support value is
  // 1/2 in every direction, and sampled <xi, a xi> never leave that disk.
  std::mt19937_64 rng(1);
  double sampled = 0.0;
  for (int t = 0; t < 100000; ++t) {
    const oracle::Vec xi = oracle::random_unit(rng, 2);
    sampled = std::max(sampled, std::abs(xi.dot(nilpotent() * xi)));
  }
  EXPECT_LE(sampled, 0.5 + 1e-12);
  EXPECT_GE(sampled, 0.5 - 1e-3);
  for (int k = 0; k < 12; ++k) EXPECT_NEAR(support_function(nilpotent(), 0.5 * k).first, 0.5, 1e-14);
}

TEST(RangeBoundary, HermitianIsRealSegment) {
  const RangeBoundary rb = range_boundary(diag01(), kCfg);
  EXPECT_EQ(rb.angles.size(), static_cast<std::size_t>(kCfg.phase_grid));
  for (const Complex z : rb.extreme_points) {
    EXPECT_NEAR(z.imag(), 0.0, 1e-12);
    EXPECT_GE(z.real(), -1e-12);
    EXPECT_LE(z.real(), 1.0 + 1e-12);
  }
  const RangeBoundary circle = range_boundary(nilpotent(), kCfg);
  for (const Complex z : circle.extreme_points) EXPECT_NEAR(std::abs(z), 0.5, 1e-12);
}

TEST(RangeContains, Examples) {
  EXPECT_TRUE(range_contains(diag01(), 0.5, kCfg));
  EXPECT_FALSE(range_contains(nilpotent(), 0.6, kCfg));
  EXPECT_TRUE(range_contains(nilpotent(), Complex(0.0, 0.49), kCfg));
  EXPECT_TRUE(range_contains(ComplexMatrix::Identity(3, 3), 1.0, kCfg));
  EXPECT_FALSE(range_contains(ComplexMatrix::Identity(3, 3), 1.01, kCfg));
}

TEST(RangeContains, MonteCarloSoundness) {
  std::mt19937_64 rng(2);
  for (int n = 2; n <= 5; ++n) {
    const ComplexMatrix a = oracle::random_matrix(rng, n, n);
    for (int t = 0; t < 250; ++t) {
      const oracle::Vec xi = oracle::random_unit(rng, n);
      EXPECT_TRUE(range_contains(a, xi.dot(a * xi), kCfg));
    }
  }
}

TEST(RangeContains, HermitianRejectsImaginaryOffsets) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix g = oracle::random_matrix(rng, 4, 4);
    const ComplexMatrix h = g + g.adjoint();
    const double off = 2.0 * kCfg.eps_eq * (1.0 + spectral_norm(h));
    EXPECT_FALSE(range_contains(h, Complex(0.0, off), kCfg));
  }
}

TEST(RangeBoundary, InsideNormDiskAndAffineCovariant) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 10; ++t) {
    const ComplexMatrix a = oracle::random_matrix(rng, 3, 3);
    const double na = spectral_norm(a);
    const RangeBoundary rb = range_boundary(a, kCfg);
    for (const Complex z : rb.extreme_points) EXPECT_LE(std::abs(z), na + 1e-9);

    const Complex alpha = oracle::random_matrix(rng, 1, 1)(0, 0), beta = oracle::random_matrix(rng, 1, 1)(0, 0);
    const ComplexMatrix b = alpha * a + beta * ComplexMatrix::Identity(3, 3);
    for (const Complex z : rb.extreme_points) EXPECT_TRUE(range_contains(b, alpha * z + beta, kCfg));
  }
}

TEST(FindPureState, HitsInteriorAndBoundaryTargets) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    const Eigen::Index n = 2 + t % 4;
    const ComplexMatrix a = oracle::random_matrix(rng, n, n);
    // Convex combination of two attained values stays inside W(a).
    const oracle::Vec p = oracle::random_unit(rng, n), q = oracle::random_unit(rng, n);
    const double s = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const Complex z = s * p.dot(a * p) + (1.0 - s) * q.dot(a * q);
    const auto eta = find_pure_state_near(a, z, 1e-10 * (1.0 + spectral_norm(a)));
    ASSERT_TRUE(eta.has_value());
    EXPECT_NEAR(eta->norm(), 1.0, 1e-12);
    EXPECT_LE(std::abs(eta->dot(a * *eta) - z), 1e-10 * (1.0 + spectral_norm(a)));
  }
  EXPECT_FALSE(find_pure_state_near(nilpotent(), 0.7, 1e-9).has_value());
}
