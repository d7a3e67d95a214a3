#include <gtest/gtest.h>

#include "modnorm/errors.hpp"
#include "modnorm/linalg.hpp"
#include "modnorm/states.hpp"
#include "modnorm/tolerance.hpp"
#include "oracles.hpp"

using namespace modnorm;

namespace {

const Complex I(0.0, 1.0);

ComplexMatrix m2(Complex a, Complex b, Complex c, Complex d) {
  ComplexMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

TEST(Adjoint, ConjugateTranspose) {
  ComplexMatrix a(1, 1);
  a(0, 0) = I;
  EXPECT_EQ(adjoint(a)(0, 0), -I);
  const ComplexMatrix n = m2(0, 1, 0, 0);
  EXPECT_EQ(adjoint(n), m2(0, 0, 1, 0));

  std::mt19937_64 rng(3);
  const ComplexMatrix r = oracle::random_matrix(rng, 3, 4);
  EXPECT_EQ(adjoint(adjoint(r)), r);
  EXPECT_NEAR(spectral_norm(adjoint(r)), oracle::power_norm(r), 1e-9 * oracle::power_norm(r));
}

TEST(RealPart, HermitianAndReconstructs) {
  EXPECT_EQ(real_part(m2(0, 0, 0, I)), m2(0, 0, 0, 0));
  std::mt19937_64 rng(4);
  const ComplexMatrix a = oracle::random_matrix(rng, 3, 3);
  const ComplexMatrix re = real_part(a);
  EXPECT_TRUE(re.isApprox(re.adjoint(), 0.0));
  const ComplexMatrix im = real_part(-I * a);
  EXPECT_LE((re + I * im - a).norm(), 1e-14 * a.norm());
  EXPECT_THROW(real_part(ComplexMatrix::Zero(2, 3)), InputError);
}

TEST(HermitianEig, DescendingAndReconstructs) {
  const SpectralDecomposition d = hermitian_eig(m2(1, 0, 0, 2));
  EXPECT_DOUBLE_EQ(d.eigenvalues(0), 2.0);
  EXPECT_DOUBLE_EQ(d.eigenvalues(1), 1.0);
  const SpectralDecomposition px = hermitian_eig(m2(0, 1, 1, 0));
  EXPECT_NEAR(px.eigenvalues(0), 1.0, 1e-15);
  EXPECT_NEAR(px.eigenvalues(1), -1.0, 1e-15);

  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix g = oracle::random_matrix(rng, 5, 5);
    const ComplexMatrix h = g + g.adjoint();
    const SpectralDecomposition e = hermitian_eig(h);
    const ComplexMatrix v = e.eigenvectors;
    EXPECT_LE((v * e.eigenvalues.cast<Complex>().asDiagonal() * v.adjoint() - h).norm(), 1e-12 * h.norm());
    EXPECT_LE((v.adjoint() * v - ComplexMatrix::Identity(5, 5)).norm(), 1e-12);
    for (int k = 1; k < 5; ++k) EXPECT_GE(e.eigenvalues(k - 1), e.eigenvalues(k));
  }
  EXPECT_THROW(hermitian_eig(m2(0, 1, 0, 0)), InputError);
}

TEST(Modulus, SquaresToGram) {
  EXPECT_LE((modulus(m2(0, 1, 0, 0)) - m2(0, 0, 0, 1)).norm(), 1e-15);
  std::mt19937_64 rng(6);
  const ComplexMatrix q = Eigen::HouseholderQR<ComplexMatrix>(oracle::random_matrix(rng, 3, 3)).householderQ();
  EXPECT_LE((modulus(q) - ComplexMatrix::Identity(3, 3)).norm(), 1e-12);
  for (int t = 0; t < 10; ++t) {
    const ComplexMatrix x = oracle::random_matrix(rng, 4, 3);
    const ComplexMatrix m = modulus(x);
    EXPECT_LE((m * m - x.adjoint() * x).norm(), 1e-12 * x.squaredNorm());
    EXPECT_TRUE(psd_check(m));
    EXPECT_NEAR(spectral_norm(m), spectral_norm(x), 1e-9 * spectral_norm(x));
  }
}

TEST(SpectralNorm, MatchesPowerIteration) {
  EXPECT_DOUBLE_EQ(spectral_norm(m2(3, 0, 0, 1)), 3.0);
  EXPECT_NEAR(spectral_norm(m2(1, 1, 1, 1)), 2.0, 1e-14);
  ComplexMatrix mx = ComplexMatrix::Zero(4, 4);
  mx.topRightCorner(2, 2) = ComplexMatrix::Identity(2, 2);
  mx.bottomLeftCorner(2, 2) = ComplexMatrix::Identity(2, 2);
  EXPECT_NEAR(spectral_norm(mx), 1.0, 1e-14);
  EXPECT_EQ(spectral_norm(ComplexMatrix::Zero(3, 2)), 0.0);

  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    const ComplexMatrix a = oracle::random_matrix(rng, 1 + t % 5, 1 + (t / 5) % 5);
    const double ref = oracle::power_norm(a);
    EXPECT_NEAR(spectral_norm(a), ref, 1e-9 * ref);
  }
}

TEST(SpectralNorm, InvolutionAndCStarIdentity) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 50; ++t) {
    const ComplexMatrix a = oracle::random_matrix(rng, 2 + t % 4, 2 + t % 3);
    const double n = spectral_norm(a);
    EXPECT_NEAR(spectral_norm(a.adjoint()), n, 1e-9 * n);
    EXPECT_NEAR(spectral_norm(a.adjoint() * a), n * n, 1e-9 * n * n);
  }
}

TEST(MinModulus, ExamplesAndStateBounds) {
  EXPECT_NEAR(min_modulus(m2(1, 0, 0, 2)), 1.0, 1e-15);
  EXPECT_NEAR(min_modulus(m2(0, 1, 0, 0)), 0.0, 1e-15);
  EXPECT_NEAR(min_modulus(ComplexMatrix::Identity(3, 3)), 1.0, 1e-15);

  // Brute-force infimum of <xi, |a| xi> over random pure states, from above.
  std::mt19937_64 rng(9);
  const ComplexMatrix a = m2(1, 0, 0, 2);
  double best = 1e300;
  for (int t = 0; t < 10000; ++t) {
    const oracle::Vec xi = oracle::random_unit(rng, 2);
    best = std::min(best, xi.dot(modulus(a) * xi).real());
  }
  EXPECT_GE(best, 1.0 - 1e-12);
  EXPECT_LE(best, 1.0 + 1e-3);

  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix x = oracle::random_matrix(rng, 3, 3);
    const ComplexMatrix g = oracle::random_matrix(rng, 3, 3);
    const ComplexMatrix rho = g * g.adjoint() / (g * g.adjoint()).trace();
    const double v = evaluate(DensityState(rho), modulus(x)).real();
    EXPECT_LE(min_modulus(x) - 1e-12, v);
    EXPECT_LE(v, spectral_norm(x) + 1e-12);
  }
}

TEST(NumericRank, ExamplesAndUnitaryInvariance) {
  std::mt19937_64 rng(10);
  const ComplexVector x = oracle::random_matrix(rng, 3, 1), y = oracle::random_matrix(rng, 3, 1);
  EXPECT_EQ(numeric_rank(outer(x, y)), 1);
  EXPECT_EQ(numeric_rank(ComplexMatrix::Identity(4, 4)), 4);
  const ComplexVector x2 = oracle::random_matrix(rng, 4, 1), y2 = oracle::random_matrix(rng, 4, 1);
  const ComplexVector x1 = oracle::random_matrix(rng, 4, 1), y1 = oracle::random_matrix(rng, 4, 1);
  EXPECT_EQ(numeric_rank(outer(x1, y1) + outer(x2, y2)), 2);
  EXPECT_EQ(numeric_rank(ComplexMatrix::Zero(3, 3)), 0);
  for (int r = 1; r <= 4; ++r) {
    const ComplexMatrix a = oracle::random_matrix(rng, 5, r) * oracle::random_matrix(rng, r, 5);
    const ComplexMatrix u = Eigen::HouseholderQR<ComplexMatrix>(oracle::random_matrix(rng, 5, 5)).householderQ();
    EXPECT_EQ(numeric_rank(a), r);
    EXPECT_EQ(numeric_rank(u * a * u.adjoint()), r);
    EXPECT_EQ(numeric_rank(1e-8 * a), r) << "rank cutoff is relative";
  }
}

TEST(PsdCheck, Examples) {
  EXPECT_TRUE(psd_check(m2(0, 0, 0, 1)));
  EXPECT_FALSE(psd_check(m2(-1, 0, 0, 1)));
  // Example-e2 blocks with S* T = 0.
  ComplexMatrix a = ComplexMatrix::Zero(4, 4), b = ComplexMatrix::Zero(4, 4);
  a(0, 0) = 1.0;
  b(1, 3) = 1.0;
  EXPECT_TRUE(psd_check(real_part(a.adjoint() * b)));
  EXPECT_THROW(psd_check(m2(0, 1, 0, 0)), InputError);
}

TEST(Outer, RankOneAction) {
  std::mt19937_64 rng(11);
  const ComplexVector x = oracle::random_matrix(rng, 3, 1), y = oracle::random_matrix(rng, 2, 1);
  const ComplexVector z = oracle::random_matrix(rng, 2, 1);
  EXPECT_LE((outer(x, y) * z - y.dot(z) * x).norm(), 1e-14 * x.norm() * y.norm() * z.norm());
}

TEST(Subspaces, TopEigenspaceAndSingularSubspace) {
  ComplexMatrix h = ComplexMatrix::Zero(3, 3);
  h.diagonal() << 2.0, 2.0, 1.0;
  EXPECT_EQ(top_eigenspace(h, 1e-9).cols(), 2);
  ComplexMatrix a = ComplexMatrix::Zero(3, 3);
  a.diagonal() << 1.0, 3.0, 3.0;
  const ComplexMatrix v = top_right_singular_subspace(a, 1e-9);
  EXPECT_EQ(v.cols(), 2);
  EXPECT_NEAR(v.row(0).norm(), 0.0, 1e-14);
}

TEST(Shapes, Validation) {
  EXPECT_THROW(require_same_shape(ComplexMatrix::Zero(2, 2), ComplexMatrix::Zero(2, 3), "t"), InputError);
  EXPECT_THROW(require_square(ComplexMatrix::Zero(2, 3), "t"), InputError);
  ComplexMatrix bad = ComplexMatrix::Zero(2, 2);
  EXPECT_TRUE(all_finite(bad));
  bad(1, 0) = Complex(std::nan(""), 0.0);
  EXPECT_FALSE(all_finite(bad));
}

TEST(ToleranceConfig, LatticeShapeAndValidation) {
  const ToleranceConfig cfg = default_tolerances();
  EXPECT_EQ(cfg.lambda_lattice.size(), 17u * 24u + 64u);
  EXPECT_NO_THROW(cfg.validate());
  for (const Complex z : cfg.lambda_lattice) {
    const auto has = [&](Complex w) {
      return std::any_of(cfg.lambda_lattice.begin(), cfg.lambda_lattice.end(),
                         [&](Complex u) { return std::abs(u - w) <= 1e-12 * (1.0 + std::abs(w)); });
    };
    EXPECT_TRUE(has(-z));
    EXPECT_TRUE(has(std::conj(z)));
    EXPECT_TRUE(has(1.0 / z));
  }
  ToleranceConfig bad = cfg;
  bad.eps_eq = 0.0;
  EXPECT_THROW(bad.validate(), InputError);
  bad = cfg;
  bad.lambda_lattice.clear();
  EXPECT_THROW(bad.validate(), InputError);
  bad = cfg;
  bad.lambda_lattice.push_back(Complex(0.3, 0.7));
  EXPECT_THROW(bad.validate(), InputError);
}
