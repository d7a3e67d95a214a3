#include <cmath>
#include <numbers>
#include <tuple>

#include "modnorm/closed_forms.hpp"
#include "modnorm/errors.hpp"
#include "modnorm/norm_opt.hpp"
#include "modnorm/numerical_range.hpp"
#include "modnorm/orthogonality.hpp"
#include "modnorm/states.hpp"
#include "suite_detail.hpp"

namespace modnorm::detail {
namespace {

ComplexMatrix diag(std::initializer_list<Complex> d) {
  ComplexVector v(static_cast<Eigen::Index>(d.size()));
  Eigen::Index k = 0;
  for (const Complex z : d) v(k++) = z;
  return v.asDiagonal();
}

// u diag(s) v* and u diag(s g) v*, so x* y = v diag(s^2 g) v*.
std::pair<ComplexMatrix, ComplexMatrix> coupled_pair(Rng& rng, const RealVector& s, const ComplexVector& g) {
  const Eigen::Index n = s.size();
  const ComplexMatrix u = random_unitary(rng, n), v = random_unitary(rng, n);
  const ComplexVector sc = s.cast<Complex>();
  return {u * sc.asDiagonal() * v.adjoint(), u * sc.cwiseProduct(g).asDiagonal() * v.adjoint()};
}

void t6_witness_check(OrthogonalityReport& rep, const OrthogonalityReport& r, const ComplexMatrix& x,
                      const ComplexMatrix& y) {
  for (const auto& [label, w] : r.witnesses) {
    const auto* phi = std::get_if<DensityState>(&w);
    if (!phi) continue;
    const double nx2 = std::pow(spectral_norm(x), 2), ny2 = std::pow(spectral_norm(y), 2);
    const double ex = std::abs(evaluate(*phi, x.adjoint() * x).real() - nx2) / nx2;
    const double ey = std::abs(evaluate(*phi, y.adjoint() * y).real() - ny2) / ny2;
    const double ez = std::abs(evaluate(*phi, real_part(x.adjoint() * y))) / std::sqrt(nx2 * ny2);
    const double worst = std::max({ex, ey, ez});
    check(rep, "witness_revalidates", worst <= 1e-5, worst);
  }
}

}  // namespace

void t6_case(const CaseInput& in, Rng& rng, OrthogonalityReport& rep) {
  const ToleranceConfig& cfg = in.cfg;
  ComplexMatrix x, y;
  bool expected = false;
  bool real_part_zero = false;
  if (in.index == 0) {
    x = diag({1.0, 1.0});
    y = diag({0.0, Complex(0.0, 1.0)});
    expected = real_part_zero = true;
  } else if (in.index == 1) {
    x = diag({1.0, 0.0});
    y = diag({0.0, -1.0});
    real_part_zero = true;
  } else if (in.index == 2) {
    x = ComplexMatrix::Identity(2, 2);
    y = -x;
  } else {
    const Eigen::Index n = 2 + in.index % 4;
    const int kind = (in.index / 4) % 4;
    RealVector s(n);
    ComplexVector g(n);
    s(0) = 1.0;
    real_part_zero = kind == 1 || kind == 3;
    for (Eigen::Index k = 1; k < n; ++k) {
      s(k) = uniform(rng, kind == 3 ? 0.5 : 0.2, 0.8);
      const double re = real_part_zero ? 0.0 : -uniform(rng, 0.0, 0.7);
      g(k) = Complex(re, uniform(rng, -0.7, 0.7));
    }
    const double sign = uniform(rng, 0.0, 1.0) < 0.5 ? -1.0 : 1.0;
    if (kind <= 1) {
      g(0) = Complex(0.0, 1.5 * sign);
      expected = true;
    } else if (kind == 2) {
      g(0) = Complex(-uniform(rng, 0.1, 1.0), 1.5 * sign);
    } else {
      // The top of |y|^2 moves to index 1, away from the top of |x|^2.
      g(0) = Complex(0.0, sign);
      g(1) = Complex(0.0, 3.0 * sign);
      for (Eigen::Index k = 2; k < n; ++k) g(k) *= 0.5;
    }
    std::tie(x, y) = coupled_pair(rng, s, g);
  }
  const OrthogonalityReport r = pythagoras_identity(x, y, cfg);
  absorb(rep, "t6", r);
  check(rep, "t6_expected_verdict", r.verdict("i_pythagoras") == expected);
  t6_witness_check(rep, r, x, y);
  if (real_part_zero) {
    const OrthogonalityReport r36 = c36_check(x, y, cfg);
    absorb(rep, "c36", r36);
    check(rep, "c36_expected_verdict", r36.verdict("i_pythagoras") == expected);
  }
}

void t10_case(const CaseInput& in, Rng& rng, OrthogonalityReport& rep) {
  const ToleranceConfig& cfg = in.cfg;
  const Eigen::Index n = 2 + in.index % 4;
  const int kind = (in.index / 4) % 4;
  const ComplexMatrix u = random_unitary(rng, n), v = random_unitary(rng, n);
  RealVector s(n);
  s(0) = 1.0;
  for (Eigen::Index k = 1; k < n; ++k) s(k) = uniform(rng, 0.1, 0.8);
  if (kind >= 2) s(1) = 1.0;
  const ComplexMatrix x = with_singular_values(u, s, v);
  ComplexMatrix y = random_complex_matrix(rng, n, n);
  bool expected = false;
  if (kind == 0) {
    // Remove the coupling <x v0, y v0> on the one-dimensional top eigenspace.
    y -= u.col(0) * (u.col(0).adjoint() * y * v.col(0)) * v.col(0).adjoint();
    expected = true;
  } else if (kind >= 2) {
    // Prescribe the compression of x* y to the two-dimensional top eigenspace:
    // diag(1, -1) has 0 in its numerical range, diag(1, 2) does not.
    const ComplexMatrix uu = u.leftCols(2), vv = v.leftCols(2);
    const ComplexMatrix target = kind == 2 ? diag({1.0, -1.0}) : diag({1.0, 2.0});
    y += uu * (target - uu.adjoint() * y * vv) * vv.adjoint();
    expected = kind == 2;
  }
  const auto three_way = [&](const ComplexMatrix& p, const ComplexMatrix& q, const std::string& tag) {
    const BjResult bj = bj_orthogonal(p, q, cfg);
    const double np = spectral_norm(p);
    const double shortfall = (np - min_lambda_norm(p, q, cfg).value) / std::max(np, 1e-300);
    const bool no_descent = shortfall <= cfg.eps_opt;
    const bool bound = bj_lower_bound_check(p, q, cfg);
    check(rep, "three_way_" + tag, bj.orthogonal == no_descent && no_descent == bound, shortfall);
    if (bj.witness) {
      const double err = std::max(rel_gap(evaluate(*bj.witness, p.adjoint() * p).real(), np * np),
                                  std::abs(evaluate(*bj.witness, p.adjoint() * q)) /
                                      std::max(np * spectral_norm(q), 1e-300));
      check(rep, "witness_" + tag, err <= 10.0 * cfg.eps_opt, err);
    }
    return bj.orthogonal;
  };
  check(rep, "expected_xy", three_way(x, y, "xy") == expected);
  three_way(y, x, "yx");
}

void t16_case(const CaseInput& in, Rng& rng, OrthogonalityReport& rep) {
  const ToleranceConfig& cfg = in.cfg;
  const Complex i(0.0, 1.0);
  ComplexMatrix a, b;
  // Expected (D, gates) for the fixed families; random families expect both gates.
  int expect_d = -1;
  bool gates_expected = true;
  if (in.index == 0) {
    // Rank-one necessity: x (x) yA, x (x) yB with <yA, yB> = 0.
    const Eigen::Index n = 3;
    const ComplexVector x = random_unit_vector(rng, n);
    const ComplexVector ya = random_unit_vector(rng, n);
    ComplexVector yb = random_complex_matrix(rng, n, 1);
    yb -= ya * ya.dot(yb);
    a = outer(x, ya);
    b = outer(x, yb);
    const OrthogonalityReport r = pythagoras_orthogonal(a, b, cfg);
    absorb(rep, "rank_one_family", r);
    check(rep, "rank_one_family_outcome", r.verdict("D_definition") && r.verdict("parallelogram") &&
                                       !r.verdict("W_witness") && !r.verdict("gate_rank"));
    return;
  }
  if (in.index == 1) {
    // Parallelogram necessity: M_I(1,0,0,1) and M_I(0,1,1,0).
    const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
    a = fkm_block(1.0, 0.0, 0.0, 1.0, id);
    b = fkm_block(0.0, 1.0, 1.0, 0.0, id);
    const OrthogonalityReport r = pythagoras_orthogonal(a, b, cfg);
    absorb(rep, "block_family", r);
    check(rep, "block_family_outcome", !r.verdict("parallelogram") && r.verdict("W_witness") &&
                                       !r.verdict("D_definition") && r.verdict("gate_rank") &&
                                       r.verdict("gate_psd"));
    return;
  }
  if (in.index == 2) {
    // Sign family: S = x (x) x + y (x) y, T = x (x) y in Example-e2 blocks,
    // where Re(alpha A* B) is never positive semidefinite.
    const Eigen::Index n = 2;
    const ComplexVector x = ComplexVector::Unit(n, 0), y = ComplexVector::Unit(n, 1);
    const BlockPair bp = block_pair_e2(outer(x, x) + outer(y, y), outer(x, y), 1.0);
    const OrthogonalityReport r = pythagoras_orthogonal(bp.a, bp.b, cfg);
    absorb(rep, "sign_family", r);
    check(rep, "sign_family_outcome", r.verdict("D_definition") && !r.verdict("gate_psd") &&
                                       r.verdict("gate_rank") && !r.verdict("W_witness"));
    return;
  }

  const Eigen::Index n = 4 + in.index % 3;
  const int kind = (in.index / 3) % 5;
  const ComplexMatrix left = random_unitary(rng, n), right = random_unitary(rng, n);
  if (kind <= 1) {
    // A = e0 e0* + A', B = e1 e0* + B' with A', B' vanishing on e0 and
    // mapping into orthogonal subspaces of span{e2, ...}.
    const Eigen::Index split = 2 + (n - 2) / 2;
    auto part = [&](Eigen::Index r0, Eigen::Index rows, double norm) {
      ComplexMatrix p = ComplexMatrix::Zero(n, n);
      p.block(r0, 1, rows, n - 1) = random_complex_matrix(rng, rows, n - 1);
      return ComplexMatrix(p * (norm / spectral_norm(p)));
    };
    const double na = kind == 0 ? uniform(rng, 0.2, 0.9) : uniform(rng, 1.3, 2.0);
    a = part(2, split - 2, na);
    b = part(split, n - split, uniform(rng, 0.2, 0.9));
    a(0, 0) += 1.0;
    b(1, 0) += 1.0;
    a = left * a * right;
    b = left * b * right;
    expect_d = kind == 0;
  } else if (kind == 2) {
    // Disjoint blocks: ||A + l B||^2 = max(||S||^2, |l|^2 ||T||^2).
    const Eigen::Index h = n / 2;
    a = ComplexMatrix::Zero(n, n);
    b = ComplexMatrix::Zero(n, n);
    a.topLeftCorner(h, h) = random_complex_matrix(rng, h, h);
    b.bottomRightCorner(n - h, n - h) = random_complex_matrix(rng, n - h, n - h);
    a = left * a * right;
    b = left * b * right;
    expect_d = 0;
  } else if (kind == 3) {
    // Positive coupling x* y >= 0.
    RealVector s(n);
    ComplexVector g(n);
    for (Eigen::Index k = 0; k < n; ++k) {
      s(k) = k == 0 ? 1.0 : uniform(rng, 0.2, 0.8);
      g(k) = uniform(rng, 0.3, 1.5);
    }
    std::tie(a, b) = coupled_pair(rng, s, g);
    expect_d = 0;
  } else {
    // Phase split on a two-dimensional top eigenspace: the witness exists
    // but the parallelogram law fails.
    RealVector s(n);
    ComplexVector g(n);
    const double amp = uniform(rng, 1.5, 2.0);
    for (Eigen::Index k = 0; k < n; ++k) {
      s(k) = k < 2 ? 1.0 : uniform(rng, 0.2, 0.5);
      g(k) = k == 0 ? amp * i : k == 1 ? -amp * i : Complex(uniform(rng, 0.0, 1.0), 0.0);
    }
    std::tie(a, b) = coupled_pair(rng, s, g);
    expect_d = 0;
  }
  const OrthogonalityReport r = pythagoras_orthogonal(a, b, cfg);
  absorb(rep, "t16", r);
  const bool gates = r.verdict("gate_rank") && r.verdict("gate_psd");
  check(rep, "hypotheses_hold", gates == gates_expected);
  check(rep, "expected_definition", r.verdict("D_definition") == (expect_d == 1));
  if (kind == 4) check(rep, "phase_split_witness", r.verdict("W_witness") && r.verdict("bj_xy"));
}

void properties_case(const CaseInput& in, Rng& rng, OrthogonalityReport& rep) {
  const ToleranceConfig& cfg = in.cfg;
  const int kind = in.index % 6;
  const Eigen::Index n = 2 + (in.index / 6) % 4;
  if (kind == 0) {
    const Eigen::Index m = 2 + in.index % 3;
    const ComplexMatrix a = random_complex_matrix(rng, n, m);
    const double na = spectral_norm(a);
    check(rep, "involution_isometry", rel_gap(spectral_norm(a.adjoint()), na) <= cfg.eps_eq);
    check(rep, "c_star_identity", rel_gap(spectral_norm(a.adjoint() * a), na * na) <= cfg.eps_eq);
    check(rep, "modulus_norm", rel_gap(spectral_norm(modulus(a)), na) <= cfg.eps_eq);
    const ComplexMatrix sq = random_complex_matrix(rng, n, n);
    const ComplexMatrix mod = modulus(sq);
    const double lo = min_modulus(sq), hi = spectral_norm(sq);
    bool sandwiched = true;
    for (int k = 0; k < 10; ++k) {
      const ComplexMatrix g = random_complex_matrix(rng, n, n);
      const ComplexMatrix rho = g * g.adjoint();
      const double val = evaluate(DensityState(rho / rho.trace().real()), mod).real();
      sandwiched = sandwiched && val >= lo - cfg.eps_eq * hi && val <= hi + cfg.eps_eq * hi;
    }
    check(rep, "min_modulus_sandwich", sandwiched);
    const int r = 1 + static_cast<int>(in.index % n);
    const ComplexMatrix low = random_complex_matrix(rng, n, r) * random_complex_matrix(rng, r, n);
    const ComplexMatrix w = random_unitary(rng, n);
    check(rep, "rank_unitary_invariant", numeric_rank(low, cfg.eps_rank) == r &&
                                             numeric_rank(w * low * w.adjoint(), cfg.eps_rank) == r);
  } else if (kind == 1) {
    const ComplexMatrix a = random_complex_matrix(rng, n, n);
    const double na = spectral_norm(a);
    const RangeBoundary rb = range_boundary(a, cfg);
    double outside = 0.0;
    for (const Complex z : rb.extreme_points) outside = std::max(outside, std::abs(z) - na);
    check(rep, "range_in_norm_disk", outside <= cfg.eps_eq * (1.0 + na), outside);
    const ComplexMatrix h = real_part(a);
    const double off = cfg.eps_eq * (1.0 + spectral_norm(h));
    check(rep, "hermitian_range_real",
          !range_contains(h, Complex(0.0, 10.0 * off), cfg) && !range_contains(h, Complex(0.5, -2.0 * off), cfg));
    const Complex alpha = random_phase_scalar(rng, 0.5, 2.0), beta = random_complex(rng);
    const ComplexMatrix t = alpha * a + beta * ComplexMatrix::Identity(n, n);
    double cov = 0.0;
    for (int k = 0; k < 8; ++k) {
      const double th = uniform(rng, 0.0, 2.0 * std::numbers::pi);
      const double lhs = support_function(t, th).first;
      const double rhs = std::abs(alpha) * support_function(a, th - std::arg(alpha)).first +
                         (std::exp(Complex(0.0, -th)) * beta).real();
      cov = std::max(cov, std::abs(lhs - rhs) / (1.0 + spectral_norm(t)));
    }
    check(rep, "affine_covariance", cov <= cfg.eps_eq, cov);
    bool contained = true;
    for (int k = 0; k < 125; ++k) {
      const ComplexVector xi = random_unit_vector(rng, n);
      contained = contained && range_contains(a, xi.dot(a * xi), cfg);
    }
    check(rep, "monte_carlo_soundness", contained);
  } else if (kind == 2) {
    // Positive p with a top eigenspace of dimension k.
    const Eigen::Index k = 1 + in.index % n;
    RealVector d(n);
    for (Eigen::Index j = 0; j < n; ++j) d(j) = j < k ? 2.0 : uniform(rng, 0.0, 1.5);
    const ComplexMatrix v = random_unitary(rng, n);
    const ComplexMatrix p = with_singular_values(v, d, v);
    const SubspaceProjection set = maximizing_set(p, cfg);
    check(rep, "maximizing_set_rank", set.rank() == k);
    double worst = 0.0;
    for (int j = 0; j < 100; ++j) {
      const ComplexMatrix g = set.basis * random_complex_matrix(rng, k, k);
      const ComplexMatrix rho = g * g.adjoint();
      worst = std::max(worst, rel_gap(evaluate(DensityState(rho / rho.trace().real()), p).real(), 2.0));
    }
    check(rep, "maximizing_states_attain_norm", worst <= cfg.eps_eq, worst);
    const IntersectionResult self = sets_intersect(set, set, cfg);
    const double inside = self.witness ? (self.witness->rho() * set.projection).trace().real() : 0.0;
    check(rep, "self_intersection", self.intersects && std::abs(inside - 1.0) <= 10.0 * cfg.eps_opt);
  } else if (kind == 3) {
    // One shape class per case: generic, diagonal, rank-one, block.
    ComplexMatrix x, y;
    switch ((in.index / 6) % 4) {
      case 0:
        x = random_complex_matrix(rng, n, n);
        y = random_complex_matrix(rng, n, n);
        break;
      case 1: {
        ComplexVector dx = random_complex_matrix(rng, n, 1), dy = random_complex_matrix(rng, n, 1);
        dy(0) = 0.0;
        x = dx.asDiagonal();
        y = dy.asDiagonal();
        break;
      }
      case 2: {
        const ComplexVector p = random_complex_matrix(rng, n, 1), q = random_complex_matrix(rng, n, 1);
        ComplexVector r = random_complex_matrix(rng, n, 1);
        r -= q * (q.dot(r) / q.squaredNorm());
        x = outer(p, q);
        y = outer(random_phase_scalar(rng, 0.5, 2.0) * p, r);
        break;
      }
      default: {
        const ComplexMatrix s = random_phase_scalar(rng, 0.5, 2.0) * random_unitary(rng, n);
        const BlockPair bp = block_pair_e2(s, random_complex_matrix(rng, n, n), 1.0);
        x = bp.a;
        y = bp.b;
        break;
      }
    }
    absorb(rep, "pythagoras", pythagoras_orthogonal(x, y, cfg));
    absorb(rep, "c5", c5_report(x, y, cfg));
    absorb(rep, "parallelogram3", parallelogram_two_imply_third(x, y, cfg));
    absorb(rep, "triangle", triangle_equality(x, y, cfg));
    const auto [c6i, c6ii] = c6_check(x, y, cfg);
    check(rep, "c6_agree", c6i == c6ii);
    try {
      absorb(rep, "t6", pythagoras_identity(x, y, cfg));
    } catch (const HypothesisError&) {
    }
  } else if (kind == 4) {
    const ComplexMatrix x = random_complex_matrix(rng, n, n);
    check(rep, "self_orthogonality_nondegenerate",
          !pythagoras_verdict(x, x, cfg) && pythagoras_verdict(ComplexMatrix::Zero(n, n), ComplexMatrix::Zero(n, n), cfg));
    // Unital fixture: y an isometry, x supported where y has a shared maximizer and no coupling.
    const ComplexMatrix u = random_unitary(rng, n + 1);
    ComplexMatrix yi = ComplexMatrix::Zero(n + 1, n);
    yi.topRows(n) = ComplexMatrix::Identity(n, n);
    const ComplexMatrix y = u * yi;
    ComplexMatrix x0 = ComplexMatrix::Zero(n + 1, n);
    x0(n, 0) = uniform(rng, 0.5, 2.0);
    const auto [pyth, bj_par] = unital_bj_plus_parallelogram(u * x0, y, cfg);
    check(rep, "unital_equivalence", pyth == bj_par && pyth);
    const auto [pyth2, bj_par2] = unital_bj_plus_parallelogram(random_complex_matrix(rng, n + 1, n), y, cfg);
    check(rep, "unital_equivalence_generic", pyth2 == bj_par2);
  } else {
    const ComplexMatrix a = random_complex_matrix(rng, n, n), b = random_complex_matrix(rng, n, n);
    const ComplexVector xi = random_unit_vector(rng, n);
    check(rep, "M_below_min", M_functional(a, b, xi, cfg) <=
                                 std::pow(min_lambda_norm(a, b, cfg).value, 2) * (1.0 + cfg.eps_opt) + cfg.eps_eq);
    check(rep, "bj_zero_orthogonal", bj_orthogonal(ComplexMatrix::Zero(n, n), a, cfg).orthogonal);
  }
}

}  // namespace modnorm::detail
