#include <cmath>
#include <limits>
#include <numbers>

#include "modnorm/closed_forms.hpp"
#include "modnorm/errors.hpp"
#include "modnorm/norm_opt.hpp"
#include "modnorm/orthogonality.hpp"
#include "suite_detail.hpp"

namespace modnorm::detail {
namespace {

RealVector decaying_spectrum(Rng& rng, Eigen::Index n, double top) {
  RealVector s(n);
  s(0) = top;
  for (Eigen::Index k = 1; k < n; ++k) s(k) = top * uniform(rng, 0.1, 0.8);
  return s;
}

ComplexMatrix block_diag_one(const ComplexMatrix& q) {
  const Eigen::Index n = q.rows() + 1;
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  m(0, 0) = 1.0;
  m.bottomRightCorner(n - 1, n - 1) = q;
  return m;
}

ComplexVector project_out(const ComplexVector& v, const ComplexVector& w) {
  return v - w * (w.dot(v) / w.squaredNorm());
}

}  // namespace

void thraj_case(const CaseInput& in, Rng& rng, OrthogonalityReport& rep) {
  const ToleranceConfig& cfg = in.cfg;
  for (int n = 2; n <= 5; ++n) {
    const ComplexMatrix a = random_complex_matrix(rng, n, n);
    const ComplexMatrix b = random_complex_matrix(rng, n, n);
    const double na2 = std::pow(spectral_norm(a), 2);
    const MinLambdaResult ml = min_lambda_norm(a, b, cfg);
    const SupMResult sm = sup_M(a, b, cfg);
    const double gap = std::abs(ml.value * ml.value - sm.value) / (1.0 + na2);
    check(rep, "thraj_equality_n" + std::to_string(n), gap <= cfg.eps_opt, gap);
    const double recheck = std::abs(M_functional(a, b, sm.xi, cfg) - sm.value) / (1.0 + na2);
    check(rep, "sup_witness_n" + std::to_string(n), recheck <= cfg.eps_eq, recheck);
  }

  const ComplexMatrix a = random_complex_matrix(rng, 3, 3);
  const ComplexMatrix b = random_complex_matrix(rng, 3, 3);
  const Complex c = random_phase_scalar(rng, 0.2, 5.0);
  const double base = min_lambda_norm(a, b, cfg).value;
  const double scaled = min_lambda_norm(c * a, c * b, cfg).value;
  const double hom = std::abs(scaled - std::abs(c) * base) / (std::abs(c) * (1.0 + spectral_norm(a)));
  check(rep, "min_lambda_homogeneity", hom <= cfg.eps_opt, hom);

  RealVector s(3);
  for (int k = 0; k < 3; ++k) s(k) = uniform(rng, 0.5, 1.5);
  const ComplexMatrix y = with_singular_values(random_unitary(rng, 3), s, random_unitary(rng, 3));
  const ComplexMatrix x = random_complex_matrix(rng, 3, 3);
  const Alpha0Result r1 = unique_alpha0(x, y, cfg);
  const Alpha0Result r2 = unique_alpha0(x, y, cfg, r1.alpha0 + random_phase_scalar(rng, 0.3, 1.0));
  const double move = std::abs(r1.alpha0 - r2.alpha0);
  check(rep, "alpha0_unique", move <= cfg.eps_opt, move);
  check(rep, "alpha0_shifted_bound", r1.shifted_bound_holds, r1.shifted_bound_violation);
}

void c5_case(const CaseInput& in, Rng& rng, OrthogonalityReport& rep) {
  const ToleranceConfig& cfg = in.cfg;
  const Eigen::Index n = 2 + in.index % 4;
  const bool shared = in.index % 2 == 0;
  const ComplexMatrix v = random_unitary(rng, n);
  const ComplexMatrix vy = shared ? ComplexMatrix(v * block_diag_one(random_unitary(rng, n - 1)))
                                  : random_unitary(rng, n);
  const RealVector dx = decaying_spectrum(rng, n, 1.0);
  const RealVector dy = decaying_spectrum(rng, n, uniform(rng, 0.5, 2.0));
  const ComplexMatrix x = with_singular_values(random_unitary(rng, n), dx.cwiseSqrt(), v);
  const ComplexMatrix y = with_singular_values(random_unitary(rng, n), dy.cwiseSqrt(), vy);

  const OrthogonalityReport r5 = c5_report(x, y, cfg);
  absorb(rep, "c5", r5);
  check(rep, "c5_expected_verdict", r5.verdict("i_sum_norm") == shared);
  const auto [c6i, c6ii] = c6_check(x, y, cfg);
  check(rep, "c6_agree", c6i == c6ii && c6i == shared);
  absorb(rep, "parallelogram3", parallelogram_two_imply_third(x, y, cfg));

  // Triangle pair: shared singular vectors give ||x + y|| = ||x|| + ||y||.
  const ComplexMatrix u = random_unitary(rng, n);
  const ComplexMatrix w = random_unitary(rng, n);
  const ComplexMatrix tx = with_singular_values(u, decaying_spectrum(rng, n, 1.0), w);
  const RealVector sy = decaying_spectrum(rng, n, uniform(rng, 0.5, 2.0));
  const ComplexMatrix ty = shared ? with_singular_values(u, sy, w)
                                  : with_singular_values(random_unitary(rng, n), sy, random_unitary(rng, n));
  const OrthogonalityReport tri = triangle_equality(tx, ty, cfg);
  absorb(rep, "triangle", tri);
  check(rep, "triangle_expected_verdict", tri.verdict("i_norm_sum") == shared);
  if (shared) {
    bool persists = true;
    for (int k = 0; k < 20; ++k) {
      persists = persists && scaled_triangle_persistence(tx, ty, uniform(rng, 0.0, 3.0), uniform(rng, 0.0, 3.0), cfg);
    }
    check(rep, "triangle_persistence", persists);
    const auto tw = triangle_witness_construct(tx, ty, cfg);
    const double target = spectral_norm(tx) * spectral_norm(ty);
    const double err = tw ? std::abs(tw->value - target) / target : 1.0;
    check(rep, "triangle_witness", tw.has_value() && err <= cfg.eps_opt, err);
  }
}

void e1_case(const CaseInput& in, Rng& rng, OrthogonalityReport& rep) {
  const ToleranceConfig& cfg = in.cfg;
  const int m = 1 + in.index % 20;
  const auto [a, b] = shift_pair_e1(m);
  double closed = 0.0, bound = 0.0;
  for (int k = 0; k < 6; ++k) {
    const Complex l = k == 0 ? Complex(-1.0, 0.0) : lattice_pick(rng, cfg);
    const double direct = std::pow(spectral_norm(a + l * b), 2);
    closed = std::max(closed, rel_gap(direct, shift_pair_e1_norm_sq(m, l)));
    const double limit = 1.0 + std::norm(l);
    // The bound is attained, so allow a few ulps of rounding on top of it.
    const double allowed = (std::ldexp(1.0, -m) + 16.0 * std::numeric_limits<double>::epsilon()) * limit;
    bound = std::max(bound, std::abs(direct - limit) / allowed);
  }
  check(rep, "closed_form", closed <= cfg.eps_eq, closed);
  check(rep, "truncation_bound", bound <= 1.0, bound);
}

void e2_case(const CaseInput& in, Rng& rng, OrthogonalityReport& rep) {
  const ToleranceConfig& cfg = in.cfg;
  const Eigen::Index n = 2 + in.index % 3;
  const int kind = (in.index / 3) % 4;
  ComplexMatrix s, t;
  bool expected = false;
  switch (kind) {
    case 0:
      s = random_complex_matrix(rng, n, n);
      t = random_complex_matrix(rng, n, n);
      break;
    case 1:
      s = random_phase_scalar(rng, 0.5, 2.0) * random_unitary(rng, n);
      t = random_complex_matrix(rng, n, n);
      expected = true;
      break;
    case 2: {
      t = random_complex_matrix(rng, n, n);
      Eigen::JacobiSVD<ComplexMatrix> svd(t, Eigen::ComputeThinU);
      ComplexMatrix span(n, 2);
      span.col(0) = svd.matrixU().col(0);
      span.col(1) = random_complex_matrix(rng, n, 1);
      const ComplexMatrix q = Eigen::HouseholderQR<ComplexMatrix>(span).householderQ() * ComplexMatrix::Identity(n, 2);
      s = q * q.adjoint();
      expected = true;
      break;
    }
    default:
      s = ComplexMatrix::Zero(n, n);
      t = ComplexMatrix::Zero(n, n);
      s(0, 0) = 1.0;
      t(1, 1) = 1.0;
      break;
  }
  const double crit_gap = rel_gap(spectral_norm(s.adjoint() * t), spectral_norm(s) * spectral_norm(t));
  const bool crit = crit_gap <= cfg.eps_eq;
  check(rep, "criterion_expected", crit == expected, crit_gap);

  const BlockPair bp = block_pair_e2(s, t, Complex(1.0, 0.0));
  double closed = 0.0;
  for (int k = 0; k < 4; ++k) {
    const Complex l = lattice_pick(rng, cfg);
    closed = std::max(closed, rel_gap(block_pair_e2(s, t, l).norm, spectral_norm(bp.a + l * bp.b)));
  }
  check(rep, "closed_form", closed <= cfg.eps_eq, closed);

  const OrthogonalityReport po = pythagoras_orthogonal(bp.a, bp.b, cfg);
  absorb(rep, "pythagoras", po);
  check(rep, "pythagoras_iff_criterion", po.verdict("D_definition") == crit);
  check(rep, "parallelogram_iff_pythagoras", po.verdict("parallelogram") == po.verdict("D_definition"));

  if (expected) {
    const double a2 = std::pow(spectral_norm(bp.a), 2), b2 = std::pow(spectral_norm(bp.b), 2);
    const P13Result p = p13_relations_check(bp.a, bp.b, -a2 / (a2 + b2), Complex(1.0, 0.0), std::sqrt(a2),
                                            std::sqrt(b2), Complex(0.0, 0.0), cfg);
    check(rep, "p13_relations", p.relations_hold, p.relation_residual);
    check(rep, "p13_bound", p.bound_violation <= cfg.eps_opt, p.bound_violation);
  }
}

void e3_case(const CaseInput& in, Rng& rng, OrthogonalityReport& rep) {
  const ToleranceConfig& cfg = in.cfg;
  // Zero patterns on (a, b, c, d) that keep A and B nonzero.
  std::vector<int> masks;
  for (int mask = 0; mask < 16; ++mask) {
    const bool a0 = mask & 1, b0 = mask & 2, c0 = mask & 4, d0 = mask & 8;
    if (!(a0 && d0) && !(b0 && c0)) masks.push_back(mask);
  }
  const int mask = masks[static_cast<std::size_t>(in.index) % masks.size()];
  Complex p[4];
  for (int k = 0; k < 4; ++k) p[k] = (mask >> k) & 1 ? Complex(0.0, 0.0) : random_phase_scalar(rng, 0.3, 2.0);
  const Complex a = p[0], b = p[1], c = p[2], d = p[3];
  const Eigen::Index k = 2 + in.index % 2;
  ComplexMatrix xm = random_complex_matrix(rng, k, k);
  xm *= uniform(rng, 0.5, 2.0) / spectral_norm(xm);
  const ComplexMatrix am = fkm_block(a, 0.0, 0.0, d, xm);
  const ComplexMatrix bm = fkm_block(0.0, b, c, 0.0, xm);

  double closed = 0.0;
  for (int j = 0; j < 4; ++j) {
    const Complex l = lattice_pick(rng, cfg);
    closed = std::max(closed, rel_gap(fkm_norm(a, l * b, l * c, d, spectral_norm(xm)), spectral_norm(am + l * bm)));
  }
  Complex q[4];
  for (auto& z : q) z = random_complex(rng);
  closed = std::max(closed, rel_gap(fkm_norm(q[0], q[1], q[2], q[3], spectral_norm(xm)),
                                    spectral_norm(fkm_block(q[0], q[1], q[2], q[3], xm))));
  check(rep, "fkm_closed_form", closed <= cfg.eps_eq, closed);

  const bool pyth = a * d == 0.0 && b * c == 0.0;
  const bool inner0 = a * b == 0.0 && c * d == 0.0;
  const OrthogonalityReport po = pythagoras_orthogonal(am, bm, cfg);
  absorb(rep, "pythagoras", po);
  check(rep, "pythagoras_iff_ad_bc_zero", po.verdict("D_definition") == pyth);
  check(rep, "parallelogram_iff_ad_bc_zero", po.verdict("parallelogram") == pyth);
  const double inner = spectral_norm(am.adjoint() * bm) / (spectral_norm(am) * spectral_norm(bm));
  check(rep, "inner_zero_iff_ab_cd_zero", (inner <= cfg.eps_eq) == inner0, inner);
  check(rep, "bj_ab_always", po.verdict("bj_xy"));
  check(rep, "roberts_always", po.verdict("roberts"));
  // The states of |B|^2 attaining ||B|| live in one diagonal block while B*A
  // is block off-diagonal, so B is orthogonal to A for every (a, b, c, d).
  check(rep, "bj_ba_always", po.verdict("bj_yx"));
}

void e4_case(const CaseInput& in, Rng& rng, OrthogonalityReport& rep) {
  const ToleranceConfig& cfg = in.cfg;
  const Eigen::Index n = 2 + in.index % 3;
  const Eigen::Index m = 2 + (in.index / 3) % 3;
  RankOnePair p{random_complex_matrix(rng, n, 1), random_complex_matrix(rng, m, 1),
                random_complex_matrix(rng, n, 1), random_complex_matrix(rng, m, 1)};
  const Complex beta = random_phase_scalar(rng, 0.3, 2.0);
  switch ((in.index / 9) % 7) {
    case 1: p.u = project_out(p.u, p.x); break;
    case 2: p.v = project_out(p.v, p.y); break;
    case 3: p.u = beta * p.x; p.v = project_out(p.v, p.y); break;
    case 4: p.v = beta * p.y; p.u = project_out(p.u, p.x); break;
    case 5: p.u = beta * p.x; break;
    case 6: p.v = beta * p.y; break;
    default: break;
  }
  const ComplexMatrix a = p.a(), b = p.b();
  double closed = 0.0;
  for (int k = 0; k < 4; ++k) {
    const Complex l = lattice_pick(rng, cfg);
    closed = std::max(closed, rel_gap(rank_one_norm(p, l), spectral_norm(a + l * b)));
  }
  check(rep, "rank_one_closed_form", closed <= cfg.eps_eq, closed);

  const RankOneVerdicts rv = rank_one_classify(p, cfg);
  check(rep, "bj_ab_agrees", rv.bj_ab == bj_orthogonal(a, b, cfg).orthogonal);
  check(rep, "bj_ba_agrees", rv.bj_ba == bj_orthogonal(b, a, cfg).orthogonal);
  check(rep, "roberts_agrees", rv.roberts == roberts_check(a, b, cfg));
  check(rep, "pythagoras_agrees", rv.pythagoras == pythagoras_verdict(a, b, cfg));
  check(rep, "parallelogram_agrees", rv.parallelogram == parallelogram_law_check(a, b, cfg));
  const bool inner0 = spectral_norm(a.adjoint() * b) <= cfg.eps_eq * spectral_norm(a) * spectral_norm(b);
  check(rep, "inner_zero_agrees", rv.inner_zero == inner0);
}

void l15_case(const CaseInput& in, Rng& rng, OrthogonalityReport& rep) {
  const ToleranceConfig& cfg = in.cfg;
  const Eigen::Index n = 2 + in.index % 3;
  const auto vec = [&] { return ComplexVector(random_complex_matrix(rng, n, 1)); };
  const Complex a1 = random_phase_scalar(rng, 0.1, 1.0);
  const Complex a2 = random_phase_scalar(rng, 1.2, 2.0);
  const Complex a3 = random_phase_scalar(rng, 2.2, 3.0);
  const int kind = in.index % 4;
  if (kind == 3) {
    const ComplexMatrix a = ComplexMatrix::Identity(n, n);
    bool rejected = false;
    try {
      rank_persistence(a, random_complex_matrix(rng, n, n), a1, a2, a3, cfg);
    } catch (const InputError&) {
      rejected = true;
    }
    check(rep, "precondition_rejected", rejected);
    return;
  }
  ComplexMatrix a, b;
  if (kind == 0) {
    const ComplexVector x = vec();
    a = outer(x, vec());
    b = outer(x, vec());
  } else if (kind == 1) {
    const ComplexVector x = vec();
    a = outer(x, vec());
    b = outer(random_phase_scalar(rng, 0.3, 2.0) * x, vec());
  } else {
    const ComplexVector y = vec();
    a = outer(vec(), y);
    b = outer(vec(), y);
  }
  check(rep, "rank_persists", rank_persistence(a, b, a1, a2, a3, cfg));
}

}  // namespace modnorm::detail
