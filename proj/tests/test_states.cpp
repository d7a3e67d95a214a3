#include <gtest/gtest.h>

#include "modnorm/errors.hpp"
#include "modnorm/norm_opt.hpp"
#include "modnorm/states.hpp"
#include "oracles.hpp"

using namespace modnorm;

namespace {

const ToleranceConfig kCfg = default_tolerances();

ComplexMatrix diag(std::initializer_list<Complex> d) {
  ComplexVector v(static_cast<Eigen::Index>(d.size()));
  Eigen::Index k = 0;
  for (const Complex z : d) v(k++) = z;
  return v.asDiagonal();
}

ComplexMatrix basis(Eigen::Index n, std::initializer_list<Eigen::Index> cols) {
  ComplexMatrix b = ComplexMatrix::Zero(n, static_cast<Eigen::Index>(cols.size()));
  Eigen::Index j = 0;
  for (const Eigen::Index c : cols) b(c, j++) = 1.0;
  return b;
}

ComplexMatrix random_density(std::mt19937_64& rng, Eigen::Index n) {
  const ComplexMatrix g = oracle::random_matrix(rng, n, n);
  const ComplexMatrix r = g * g.adjoint();
  return r / r.trace().real();
}

}  // namespace

TEST(DensityState, Validation) {
  EXPECT_NO_THROW(DensityState(diag({0.5, 0.5})));
  EXPECT_THROW(DensityState(diag({1.5, -0.5})), InputError);
  EXPECT_THROW(DensityState(diag({0.5, 0.6})), InputError);
  ComplexMatrix skew = diag({0.5, 0.5});
  skew(0, 1) = 0.3;
  EXPECT_THROW(DensityState{skew}, InputError);
  EXPECT_THROW(DensityState::pure(ComplexVector::Zero(2)), InputError);
  const DensityState mm = DensityState::maximally_mixed(4);
  EXPECT_NEAR(mm.rho().trace().real(), 1.0, 1e-15);
}

TEST(Evaluate, Examples) {
  const DensityState e1 = DensityState::pure(ComplexVector::Unit(2, 0));
  EXPECT_NEAR(evaluate(e1, diag({2.0, 3.0})).real(), 2.0, 1e-15);
  std::mt19937_64 rng(1);
  const ComplexMatrix a = oracle::random_matrix(rng, 3, 3);
  EXPECT_LE(std::abs(evaluate(DensityState::maximally_mixed(3), a) - a.trace() / 3.0), 1e-14);
  EXPECT_THROW(evaluate(e1, a), InputError);

  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix g = oracle::random_matrix(rng, 4, 4);
    const ComplexMatrix h = g + g.adjoint();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
    const Complex v = evaluate(DensityState(random_density(rng, 4)), h);
    EXPECT_NEAR(v.imag(), 0.0, 1e-12);
    EXPECT_GE(v.real(), es.eigenvalues()(0) - 1e-12);
    EXPECT_LE(v.real(), es.eigenvalues()(3) + 1e-12);
  }
}

TEST(MaximizingSet, Examples) {
  const SubspaceProjection p = maximizing_set(diag({2.0, 2.0, 1.0}), kCfg);
  EXPECT_EQ(p.rank(), 2);
  EXPECT_LE((p.projection - diag({1.0, 1.0, 0.0})).norm(), 1e-12);
  std::mt19937_64 rng(2);
  const ComplexVector x = oracle::random_unit(rng, 3);
  const SubspaceProjection q = maximizing_set(outer(x, x), kCfg);
  EXPECT_LE((q.projection - outer(x, x)).norm(), 1e-12);
  EXPECT_THROW(maximizing_set(ComplexMatrix::Zero(2, 2), kCfg), InputError);
  EXPECT_THROW(maximizing_set(diag({1.0, -2.0}), kCfg), InputError);
  EXPECT_EQ(maximizing_set_or_all(ComplexMatrix::Zero(3, 3), kCfg).rank(), 3);
}

TEST(MaximizingSet, InteriorStatesAttainNorm) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) {
    const ComplexMatrix x = oracle::random_matrix(rng, 4, 4);
    ComplexMatrix p = x.adjoint() * x;
    // Force a two-dimensional top eigenspace.
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(p);
    RealVector ev = es.eigenvalues();
    ev(2) = ev(3);
    p = es.eigenvectors() * ev.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
    const SubspaceProjection set = maximizing_set(p, kCfg);
    ASSERT_EQ(set.rank(), 2);
    const double np = spectral_norm(p);
    for (int k = 0; k < 100; ++k) {
      const ComplexMatrix g = set.basis * oracle::random_matrix(rng, 2, 2);
      const ComplexMatrix rho = g * g.adjoint() / (g * g.adjoint()).trace().real();
      EXPECT_NEAR(evaluate(DensityState(rho), p).real(), np, 1e-9 * np);
    }
  }
}

TEST(SetsIntersect, Examples) {
  const auto a = SubspaceProjection::from_basis(basis(3, {0, 1}));
  const auto b = SubspaceProjection::from_basis(basis(3, {1, 2}));
  const IntersectionResult r = sets_intersect(a, b, kCfg);
  ASSERT_TRUE(r.intersects);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_NEAR(r.witness->rho()(1, 1).real(), 1.0, 1e-9);
  EXPECT_FALSE(sets_intersect(SubspaceProjection::from_basis(basis(2, {0})),
                              SubspaceProjection::from_basis(basis(2, {1})), kCfg)
                   .intersects);

  const ComplexMatrix x = diag({1.0, 1.0});
  const ComplexMatrix y = diag({0.0, Complex(0.0, 1.0)});
  const IntersectionResult t6 = sets_intersect(maximizing_set(x.adjoint() * x, kCfg),
                                               maximizing_set(y.adjoint() * y, kCfg), kCfg);
  ASSERT_TRUE(t6.intersects);
  EXPECT_NEAR(t6.witness->rho()(1, 1).real(), 1.0, 1e-9);
}

TEST(SetsIntersect, SelfIntersectionAndBridge) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 30; ++t) {
    const Eigen::Index n = 2 + t % 4;
    const ComplexMatrix x = oracle::random_matrix(rng, n, n), y = oracle::random_matrix(rng, n, n);
    const SubspaceProjection px = maximizing_set(x.adjoint() * x, kCfg);
    const IntersectionResult self = sets_intersect(px, px, kCfg);
    ASSERT_TRUE(self.intersects);
    EXPECT_NEAR((self.witness->rho() * px.projection).trace().real(), 1.0, 1e-9);

    // Shared top right-singular direction: ||x|| ||y|| is attained by | |x| |y| |.
    const SubspaceProjection py = maximizing_set(y.adjoint() * y, kCfg);
    const bool meet = sets_intersect(px, py, kCfg).intersects;
    const double prod = spectral_norm(modulus(x) * modulus(y));
    EXPECT_EQ(meet, std::abs(prod - spectral_norm(x) * spectral_norm(y)) <= 1e-6 * prod);
  }
}

TEST(SubspaceOps, IntersectionAndContainment) {
  const auto a = SubspaceProjection::from_basis(basis(4, {0, 1, 2}));
  const auto b = SubspaceProjection::from_basis(basis(4, {1, 2, 3}));
  EXPECT_EQ(subspace_intersection(a, b, kCfg).rank(), 2);
  EXPECT_TRUE(subspace_contained(SubspaceProjection::from_basis(basis(4, {1})), a, kCfg));
  EXPECT_FALSE(subspace_contained(b, a, kCfg));
  EXPECT_EQ(subspace_intersection(SubspaceProjection::from_basis(basis(2, {0})),
                                  SubspaceProjection::from_basis(basis(2, {1})), kCfg)
                .rank(),
            0);
}

TEST(WitnessWithZero, Examples) {
  const auto full = SubspaceProjection::full(2);
  const auto w = witness_in_set_with_zero(full, diag({1.0, -1.0}), kCfg);
  ASSERT_TRUE(w.has_value());
  EXPECT_LE(std::abs(evaluate(*w, diag({1.0, -1.0}))), 1e-9);
  const auto e1 = SubspaceProjection::from_basis(basis(2, {0}));
  EXPECT_FALSE(witness_in_set_with_zero(e1, diag({1.0, 0.0}), kCfg).has_value());

  // Birkhoff-James case: x = diag(1,0), y = diag(0,1), c = x* y = 0.
  const ComplexMatrix x = diag({1.0, 0.0}), y = diag({0.0, 1.0});
  const auto bj = witness_in_set_with_zero(maximizing_set(x.adjoint() * x, kCfg), x.adjoint() * y, kCfg);
  ASSERT_TRUE(bj.has_value());
  EXPECT_NEAR(bj->rho()(0, 0).real(), 1.0, 1e-9);
  EXPECT_NEAR(min_lambda_norm(x, y, kCfg).value, 1.0, 1e-9);
}

TEST(WitnessWithZero, SoundOnRandomCompressions) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    const ComplexMatrix c = oracle::random_matrix(rng, 4, 4);
    const auto p = SubspaceProjection::from_basis(
        Eigen::HouseholderQR<ComplexMatrix>(oracle::random_matrix(rng, 4, 2)).householderQ() *
        ComplexMatrix::Identity(4, 2));
    const auto w = witness_in_set_with_zero(p, c, kCfg);
    // Independent decision: 0 in W(B* c B) iff no direction strictly separates it.
    const ComplexMatrix comp = p.basis.adjoint() * c * p.basis;
    double worst = 1e300;
    for (int k = 0; k < 3600; ++k) {
      const Complex e = std::polar(1.0, 2.0 * 3.141592653589793 * k / 3600.0);
      const ComplexMatrix h = (e * comp + std::conj(e) * comp.adjoint()) / 2.0;
      worst = std::min(worst, Eigen::SelfAdjointEigenSolver<ComplexMatrix>(h).eigenvalues()(1));
    }
    if (std::abs(worst) < 1e-3) continue;  // too close to call by grid
    EXPECT_EQ(w.has_value(), worst > 0.0);
    if (w) {
      EXPECT_NEAR((w->rho() * p.projection).trace().real(), 1.0, 1e-9);
      EXPECT_LE(std::abs(evaluate(*w, c)), 1e-6 * (1.0 + spectral_norm(c)));
    }
  }
}
