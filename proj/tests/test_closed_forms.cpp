#include <gtest/gtest.h>

#include "modnorm/closed_forms.hpp"
#include "modnorm/errors.hpp"
#include "modnorm/norm_opt.hpp"
#include "modnorm/orthogonality.hpp"
#include "oracles.hpp"

using namespace modnorm;

namespace {

const ToleranceConfig kCfg = default_tolerances();
const Complex I(0.0, 1.0);

Complex rc(std::mt19937_64& rng) { return oracle::random_matrix(rng, 1, 1)(0, 0); }

RankOnePair random_rank_one(std::mt19937_64& rng, Eigen::Index n, Eigen::Index k) {
  return {oracle::random_matrix(rng, n, 1), oracle::random_matrix(rng, k, 1), oracle::random_matrix(rng, n, 1),
          oracle::random_matrix(rng, k, 1)};
}

ComplexVector orth_to(std::mt19937_64& rng, const ComplexVector& q) {
  ComplexVector v = oracle::random_matrix(rng, q.size(), 1);
  return v - q * (q.dot(v) / q.squaredNorm());
}

}  // namespace

TEST(Fkm, Examples) {
  EXPECT_NEAR(fkm_norm(0.0, 1.0, 1.0, 0.0, 1.0), 1.0, 1e-15);
  EXPECT_NEAR(fkm_norm(1.0, 0.0, 0.0, 1.0, 5.0), 1.0, 1e-15);
  EXPECT_NEAR(fkm_norm(2.0, 0.0, 0.0, I, 1.0), 2.0, 1e-15);
  EXPECT_NEAR(fkm_norm(1.0, 1.0, 1.0, 1.0, 1.0), 2.0, 1e-14);
  EXPECT_NEAR(fkm_norm(0.0, 3.0, 0.0, 0.0, 2.0), 6.0, 1e-14);
}

TEST(Fkm, MatchesSvdOfBlock) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 40; ++t) {
    const Eigen::Index n = 1 + t % 4;
    const ComplexMatrix x = oracle::random_matrix(rng, n, n);
    const Complex a = rc(rng), b = rc(rng), c = rc(rng), d = rc(rng);
    const double ref = oracle::power_norm(fkm_block(a, b, c, d, x));
    EXPECT_NEAR(fkm_norm(a, b, c, d, oracle::power_norm(x)), ref, 1e-9 * ref);
  }
}

TEST(RankOne, NormMatchesSvd) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 40; ++t) {
    const RankOnePair p = random_rank_one(rng, 2 + t % 3, 2 + t % 4);
    const Complex l = 2.0 * rc(rng);
    const double ref = oracle::power_norm(p.a() + l * p.b());
    EXPECT_NEAR(rank_one_norm(p, l), ref, 1e-9 * ref);
  }
  ComplexVector e0 = ComplexVector::Unit(2, 0), e1 = ComplexVector::Unit(2, 1);
  EXPECT_NEAR(rank_one_norm({e0, e0, e1, e1}, 3.0), 3.0, 1e-14);
  EXPECT_NEAR(rank_one_norm({e0, e0, e0, e0}, -1.0), 0.0, 1e-14);
}

TEST(RankOne, ClassifyExamples) {
  std::mt19937_64 rng(3);
  // Generic pair: nothing holds.
  const RankOneVerdicts g = rank_one_classify(random_rank_one(rng, 3, 3), kCfg);
  EXPECT_FALSE(g.bj_ab || g.bj_ba || g.roberts || g.pythagoras || g.parallelogram || g.inner_zero);

  // Orthogonal ranges: A* B = 0, but |A + lB|^2 = |A|^2 + |l|^2 |B|^2 has
  // non-additive norm unless y, v are dependent.
  const ComplexVector x = oracle::random_matrix(rng, 3, 1);
  const RankOnePair o{x, oracle::random_matrix(rng, 3, 1), orth_to(rng, x), oracle::random_matrix(rng, 3, 1)};
  const RankOneVerdicts ov = rank_one_classify(o, kCfg);
  EXPECT_TRUE(ov.inner_zero && ov.bj_ab && ov.bj_ba && ov.roberts);
  EXPECT_FALSE(ov.pythagoras || ov.parallelogram);

  // u parallel to x with v orthogonal to y: Pythagoras without A* B = 0.
  const ComplexVector y = oracle::random_matrix(rng, 3, 1);
  const RankOnePair s{x, y, Complex(0.4, 1.0) * x, orth_to(rng, y)};
  const RankOneVerdicts sv = rank_one_classify(s, kCfg);
  EXPECT_TRUE(sv.pythagoras && sv.parallelogram && sv.bj_ab && sv.bj_ba && sv.roberts);
  EXPECT_FALSE(sv.inner_zero);

  // Parallel v with orthogonal ranges broken: parallelogram only.
  const RankOnePair pl{x, y, oracle::random_matrix(rng, 3, 1), Complex(0.0, 2.0) * y};
  const RankOneVerdicts pv = rank_one_classify(pl, kCfg);
  EXPECT_TRUE(pv.parallelogram);
  EXPECT_FALSE(pv.pythagoras);
}

TEST(RankOne, ClassifyAgreesWithGenericDeciders) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 24; ++t) {
    RankOnePair p = random_rank_one(rng, 3, 2);
    switch (t % 4) {
      case 1: p.u = orth_to(rng, p.x); break;
      case 2: p.u = rc(rng) * p.x; p.v = orth_to(rng, p.y); break;
      case 3: p.v = rc(rng) * p.y; break;
      default: break;
    }
    const RankOneVerdicts v = rank_one_classify(p, kCfg);
    const ComplexMatrix a = p.a(), b = p.b();
    EXPECT_EQ(v.pythagoras, pythagoras_verdict(a, b, kCfg)) << t;
    EXPECT_EQ(v.parallelogram, parallelogram_law_check(a, b, kCfg)) << t;
    EXPECT_EQ(v.roberts, roberts_check(a, b, kCfg)) << t;
    EXPECT_EQ(v.bj_ab, bj_orthogonal(a, b, kCfg).orthogonal) << t;
    EXPECT_EQ(v.bj_ba, bj_orthogonal(b, a, kCfg).orthogonal) << t;
    EXPECT_EQ(v.inner_zero, (a.adjoint() * b).norm() <= 1e-12 * a.norm() * b.norm()) << t;
  }
}

TEST(LinearlyDependent, Examples) {
  ComplexVector u(2), v(2);
  u << 1.0, I;
  v = Complex(0.0, -3.0) * u;
  EXPECT_TRUE(linearly_dependent(u, v, 1e-12));
  v << 1.0, 0.0;
  EXPECT_FALSE(linearly_dependent(u, v, 1e-12));
  EXPECT_TRUE(linearly_dependent(u, ComplexVector::Zero(2), 1e-12));
}

TEST(BlockPair, ExampleAndSvd) {
  ComplexMatrix t = ComplexMatrix::Zero(2, 2);
  t(0, 0) = 1.0;
  const BlockPair e2 = block_pair_e2(ComplexMatrix::Identity(2, 2), t, 1.0);
  EXPECT_NEAR(e2.norm * e2.norm, 2.0, 1e-14);
  EXPECT_EQ(e2.a.rows(), 4);
  EXPECT_NEAR(oracle::power_norm(e2.a + e2.b), e2.norm, 1e-12);

  std::mt19937_64 rng(5);
  for (int k = 0; k < 20; ++k) {
    const ComplexMatrix s = oracle::random_matrix(rng, 3, 3), tt = oracle::random_matrix(rng, 3, 3);
    const Complex l = rc(rng);
    const BlockPair bp = block_pair_e2(s, tt, l);
    const double ref = oracle::power_norm(bp.a + l * bp.b);
    EXPECT_NEAR(bp.norm, ref, 1e-9 * ref);
  }
}

TEST(ShiftPair, ClosedFormAndTruncation) {
  EXPECT_NEAR(shift_pair_e1_norm_sq(1, 0.0), 0.5, 1e-15);
  EXPECT_NEAR(shift_pair_e1_norm_sq(3, -1.0), 7.0 / 4.0, 1e-15);
  for (int m = 1; m <= 8; ++m) {
    const auto [a, b] = shift_pair_e1(m);
    EXPECT_EQ(a.rows(), 2 * m + 2);
    for (const Complex l : {Complex(0.0), Complex(-1.0), Complex(1.0), Complex(0.3, -2.0), Complex(5.0, 1.0)}) {
      const double ref = std::pow(oracle::power_norm(a + l * b), 2);
      EXPECT_NEAR(shift_pair_e1_norm_sq(m, l), ref, 1e-9 * (1.0 + ref)) << m;
      EXPECT_LE(ref, (1.0 + std::norm(l)) * (1.0 + 1e-12));
    }
  }
  EXPECT_THROW(shift_pair_e1(0), InputError);
}

TEST(ContPair, Fixture) {
  const auto [f, g] = cont_pair_fixture(3);
  EXPECT_EQ(f.rows(), 3);
  EXPECT_NEAR(f(0, 0).real(), 0.5, 1e-15);
  EXPECT_NEAR(f(1, 1).real(), 0.0, 1e-15);
  EXPECT_NEAR(g(2, 2).real(), 0.5, 1e-15);
  EXPECT_LE((f * g).norm(), 1e-15);
  for (const int n : {3, 11, 101}) {
    const auto [fn, gn] = cont_pair_fixture(n);
    EXPECT_FALSE(pythagoras_verdict(fn, gn, kCfg)) << n;
    EXPECT_FALSE(c5_report(fn, gn, kCfg).verdict("i_sum_norm")) << n;
    EXPECT_TRUE(roberts_check(fn, gn, kCfg)) << n;
  }
}

TEST(RankPersistence, Examples) {
  std::mt19937_64 rng(6);
  const ComplexVector x = oracle::random_matrix(rng, 3, 1), y = oracle::random_matrix(rng, 3, 1);
  const ComplexVector v = oracle::random_matrix(rng, 3, 1);
  // Shared left factor: A + alpha B = x (y + conj(alpha) v)* has rank one.
  EXPECT_TRUE(rank_persistence(outer(x, y), outer(x, v), 1.0, I, -2.0, kCfg));
  EXPECT_THROW(rank_persistence(ComplexMatrix::Identity(3, 3), outer(x, v), 1.0, I, -2.0, kCfg), InputError);
  EXPECT_THROW(rank_persistence(outer(x, y), outer(x, v), 1.0, 1.0, -2.0, kCfg), InputError);
}
