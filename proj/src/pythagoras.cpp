#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "modnorm/errors.hpp"
#include "modnorm/norm_opt.hpp"
#include "modnorm/orthogonality.hpp"
#include "orthogonality_detail.hpp"

namespace modnorm {

using namespace detail;

namespace {

bool scaled_identity_holds(const ComplexMatrix& x, const ComplexMatrix& y, Complex a, Complex b,
                           double nx2, double ny2, double eps) {
  const double rhs = std::norm(a) * nx2 + std::norm(b) * ny2;
  return rel_defect(norm_sq(a * x + b * y), rhs) <= eps;
}

// Statements "<label>_some" / "<label>_every" over sampled pairs.
void scaled_statements(OrthogonalityReport& rep, const std::string& label, const ComplexMatrix& x,
                       const ComplexMatrix& y, const ToleranceConfig& cfg, int kind) {
  const double nx2 = norm_sq(x), ny2 = norm_sq(y);
  bool some = false, every = true;
  double worst = 0.0;
  for (const auto& [a, b] : sampled_scalar_pairs(cfg, kind)) {
    const double rhs = std::norm(a) * nx2 + std::norm(b) * ny2;
    worst = std::max(worst, rel_defect(norm_sq(a * x + b * y), rhs));
    const bool ok = scaled_identity_holds(x, y, a, b, nx2, ny2, cfg.eps_eq);
    some = some || ok;
    every = every && ok;
  }
  rep.set(label + "_some", some, worst);
  rep.set(label + "_every", every, worst);
}

// psd gate: Re(e^{i t} c) >= 0 for some grid phase.
bool positive_phase_exists(const ComplexMatrix& c, double tol, int phase_grid) {
  const ComplexMatrix re = (c + c.adjoint()) / 2.0;
  const ComplexMatrix im = (c - c.adjoint()) / Complex(0.0, 2.0);
  for (int k = 0; k < phase_grid; ++k) {
    const double t = 2.0 * std::numbers::pi * k / phase_grid;
    const ComplexMatrix h = std::cos(t) * re - std::sin(t) * im;
    if (hermitian_min_eigenvalue(h) >= -tol) return true;
  }
  return false;
}

bool rank_gate(const ComplexMatrix& x, const ComplexMatrix& y, const ToleranceConfig& cfg) {
  if (numeric_rank(x, cfg.eps_rank) > 1) return true;
  for (const Complex lam : cfg.lambda_lattice) {
    if (numeric_rank(x + lam * y, cfg.eps_rank) > 1) return true;
  }
  return false;
}

}  // namespace

OrthogonalityReport pythagoras_identity(const ComplexMatrix& x, const ComplexMatrix& y,
                                        const ToleranceConfig& cfg) {
  require_same_shape(x, y, "pythagoras_identity");
  const double nx = spectral_norm(x), ny = spectral_norm(y);
  const double nx2 = nx * nx, ny2 = ny * ny;
  const ComplexMatrix inner = x.adjoint() * y;
  if (!nonpositive_real_part(inner, cfg.eps_eq * nx * ny)) {
    throw HypothesisError("pythagoras_identity requires Re(x*y) <= 0");
  }
  OrthogonalityReport rep;
  rep.tolerances_used = cfg;
  const ComplexMatrix px = x.adjoint() * x, py = y.adjoint() * y;
  const ComplexMatrix s = x + y;
  const ComplexMatrix s2 = s.adjoint() * s;

  const double d1 = rel_defect(norm_sq(s), nx2 + ny2);
  rep.set("i_pythagoras", d1 <= cfg.eps_eq, d1);
  rep.set("ii_numrange", contains_rel(s2, nx2 + ny2, cfg.eps_eq, cfg.phase_grid),
          range_gap(s2, nx2 + ny2, cfg.phase_grid));

  const SubspaceProjection meet =
      subspace_intersection(maximizing_set_or_all(px, cfg), maximizing_set_or_all(py, cfg), cfg);
  const auto witness = witness_in_set_with_zero(meet, real_part(inner), cfg);
  rep.set("iii_state_witness", witness.has_value());
  if (witness) {
    rep.add_witness("iii_state_witness", *witness);
    const double scale = std::max(nx2 + ny2, 1e-300);
    const bool ok = witness_maximizes(*witness, x, y, cfg) &&
                    std::abs(evaluate(*witness, real_part(inner))) <= 10.0 * cfg.eps_opt * scale;
    rep.require(ok, "state witness re-validates");
  }

  const double p1a = rel_defect(spectral_norm(px + 2.0 * real_part(inner) + py), spectral_norm(px + py));
  const double p1b = rel_defect(spectral_norm(modulus(x) * modulus(y)), nx * ny);
  rep.set("sum_modulus_norms", p1a <= cfg.eps_eq && p1b <= cfg.eps_eq, std::max(p1a, p1b));

  scaled_statements(rep, "scaled_positive_ratio", x, y, cfg, 0);
  rep.require_agree({"i_pythagoras", "ii_numrange", "iii_state_witness", "sum_modulus_norms", "scaled_positive_ratio_some",
                     "scaled_positive_ratio_every"},
                    "Pythagoras identity characterizations agree");

  if (rep.verdict("i_pythagoras")) {
    // Lower bound: ||a x + b y||^2 >= |a|^2 ||x||^2 + |b|^2 ||y||^2 when conj(a) b is real.
    double worst = 0.0;
    for (const Complex a : {Complex(1.0, 0.0), std::polar(2.0, std::numbers::pi / 4.0)}) {
      for (const double t : {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 3.0}) {
        const Complex b = t * a;
        const double rhs = std::norm(a) * nx2 + std::norm(b) * ny2;
        if (rhs == 0.0) continue;
        worst = std::max(worst, (rhs - norm_sq(a * x + b * y)) / rhs);
      }
    }
    rep.set("real_ratio_lower_bound", worst <= cfg.eps_eq, std::max(worst, 0.0));
    rep.require(worst <= cfg.eps_eq, "real-ratio lower bound under the Pythagoras identity");
  }
  rep.finalize();
  return rep;
}

OrthogonalityReport c36_check(const ComplexMatrix& x, const ComplexMatrix& y, const ToleranceConfig& cfg) {
  require_same_shape(x, y, "c36_check");
  const double nx = spectral_norm(x), ny = spectral_norm(y);
  const double nx2 = nx * nx, ny2 = ny * ny;
  const ComplexMatrix inner = x.adjoint() * y;
  if (spectral_norm(real_part(inner)) > cfg.eps_eq * nx * ny) {
    throw HypothesisError("c36_check requires Re(x*y) = 0");
  }
  const bool c16 = spectral_norm(inner) <= cfg.eps_eq * nx * ny;
  OrthogonalityReport rep;
  rep.tolerances_used = cfg;
  const ComplexMatrix px = x.adjoint() * x, py = y.adjoint() * y;
  const ComplexMatrix s = x + y;

  const double d1 = rel_defect(norm_sq(s), nx2 + ny2);
  rep.set("i_pythagoras", d1 <= cfg.eps_eq, d1);
  scaled_statements(rep, "ii_scaled_real_ratio", x, y, cfg, 1);
  const double d3 = rel_defect(spectral_norm(modulus(x) * modulus(y)), nx * ny);
  rep.set("iii_modulus_product", d3 <= cfg.eps_eq, d3);

  const SubspaceProjection sx = maximizing_set_or_all(px, cfg), sy = maximizing_set_or_all(py, cfg);
  const SubspaceProjection meet = subspace_intersection(sx, sy, cfg);
  const SubspaceProjection ssum = maximizing_set_or_all(s.adjoint() * s, cfg);
  const bool eq = meet.rank() > 0 && subspace_contained(ssum, meet, cfg) && subspace_contained(meet, ssum, cfg);
  rep.set("iv_maximizing_sets_equal", eq);

  if (c16) {
    scaled_statements(rep, "c16_scaled_any", x, y, cfg, 2);
    rep.require_agree({"i_pythagoras", "ii_scaled_real_ratio_some", "ii_scaled_real_ratio_every",
                       "iii_modulus_product", "iv_maximizing_sets_equal", "c16_scaled_any_some",
                       "c16_scaled_any_every"},
                      "c36 / c16 agreement");
  } else {
    rep.require_agree({"i_pythagoras", "ii_scaled_real_ratio_some", "ii_scaled_real_ratio_every",
                       "iii_modulus_product", "iv_maximizing_sets_equal"},
                      "c36 four-way agreement");
  }
  rep.finalize();
  return rep;
}

OrthogonalityReport pythagoras_orthogonal(const ComplexMatrix& x, const ComplexMatrix& y,
                                          const ToleranceConfig& cfg) {
  require_same_shape(x, y, "pythagoras_orthogonal");
  OrthogonalityReport rep;
  rep.tolerances_used = cfg;
  const double nx = spectral_norm(x), ny = spectral_norm(y);
  const double nx2 = nx * nx, ny2 = ny * ny;
  const ComplexMatrix inner = x.adjoint() * y;

  const LatticeCheck def = pythagoras_lattice(x, y, cfg);
  rep.set("D_definition", def.holds, def.residual);
  const LatticeCheck par = parallelogram_lattice(x, y, cfg);
  rep.set("parallelogram", par.holds, par.residual);
  const LatticeCheck rob = roberts_lattice(x, y, cfg);
  rep.set("roberts", rob.holds, rob.residual);
  const BjResult bxy = bj_orthogonal(x, y, cfg);
  const BjResult byx = bj_orthogonal(y, x, cfg);
  rep.set("bj_xy", bxy.orthogonal);
  rep.set("bj_yx", byx.orthogonal);

  const bool gate_rank = rank_gate(x, y, cfg);
  const bool gate_psd = positive_phase_exists(inner, cfg.eps_eq * nx * ny, cfg.phase_grid);
  rep.set("gate_rank", gate_rank);
  rep.set("gate_psd", gate_psd);

  // W: parallelogram law plus a unit vector with ||x xi|| = ||x||, ||y xi|| = ||y||
  // and <x xi, y xi> = 0, searched exactly in the intersection of the maximizing spaces.
  const SubspaceProjection meet = subspace_intersection(maximizing_set_or_all(x.adjoint() * x, cfg),
                                                        maximizing_set_or_all(y.adjoint() * y, cfg), cfg);
  const auto w = witness_in_set_with_zero(meet, inner, cfg);
  bool witness_ok = false;
  if (w) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(w->rho());
    const ComplexVector xi = es.eigenvectors().col(w->dim() - 1);
    const double scale = std::max(nx2 + ny2, 1e-300);
    const double penalty = (std::pow(nx - (x * xi).norm(), 2) + std::pow(ny - (y * xi).norm(), 2) +
                            std::norm((x * xi).dot(y * xi))) /
                           scale;
    witness_ok = penalty <= cfg.eps_opt;
    rep.set("W_witness", witness_ok, penalty);
    rep.add_witness("W_witness", ComplexVector(xi));
  } else {
    rep.set("W_witness", false, 1.0);
  }
  rep.set("W_characterization", par.holds && witness_ok);
  if (gate_rank && gate_psd) rep.require_agree({"D_definition", "W_characterization"}, "t16 (D) <=> (W)");

  // Derived properties.
  rep.require_implies("D_definition", "roberts");
  rep.require_implies("D_definition", "bj_xy");
  rep.require_implies("D_definition", "bj_yx");
  rep.require_implies("D_definition", "parallelogram");
  rep.set("symmetric", pythagoras_verdict(y, x, cfg) == def.holds);
  rep.require(rep.verdict("symmetric"), "verdict symmetric in (x, y)");
  bool homogeneous = true;
  for (const auto& [a, b] : {std::pair<Complex, Complex>{2.0, Complex(0.0, 1.0)},
                             std::pair<Complex, Complex>{-0.5, std::polar(4.0, std::numbers::pi / 6.0)}}) {
    homogeneous = homogeneous && (pythagoras_verdict(a * x, b * y, cfg) == def.holds);
  }
  rep.set("homogeneous", homogeneous);
  rep.require(homogeneous, "verdict invariant under (x, y) -> (a x, b y)");
  if (rob.holds) rep.require(def.holds == par.holds, "property (j): Roberts => (Pythagoras <=> parallelogram)");
  if (x.rows() == x.cols()) {
    rep.set("adjoint_invariant", pythagoras_verdict(x.adjoint(), y.adjoint(), cfg) == def.holds);
    rep.require(rep.verdict("adjoint_invariant"), "property (d): x perp y <=> x* perp y*");
  }
  const bool self = pythagoras_verdict(x, x, cfg);
  rep.set("nondegenerate", !self || nx <= cfg.eps_eq);
  rep.require(rep.verdict("nondegenerate"), "x perp x forces x = 0");
  rep.finalize();
  return rep;
}

std::pair<bool, bool> unital_bj_plus_parallelogram(const ComplexMatrix& x, const ComplexMatrix& y,
                                                   const ToleranceConfig& cfg) {
  require_same_shape(x, y, "unital_bj_plus_parallelogram");
  const ComplexMatrix py = y.adjoint() * y;
  const double alpha = spectral_norm(py);
  const Eigen::Index n = py.rows();
  if (!(alpha > 0.0) || spectral_norm(py - alpha * ComplexMatrix::Identity(n, n)) > cfg.eps_eq * alpha) {
    throw HypothesisError("unital theorem requires |y|^2 = alpha I with alpha > 0");
  }
  const bool pyth = pythagoras_verdict(x, y, cfg);
  const bool rhs = bj_orthogonal(x, y, cfg).orthogonal && parallelogram_law_check(x, y, cfg);
  return {pyth, rhs};
}

P13Result p13_relations_check(const ComplexMatrix& a, const ComplexMatrix& b, double lambda0, Complex alpha,
                              double a_lim, double b_lim, Complex c_lim, const ToleranceConfig& cfg) {
  require_same_shape(a, b, "p13_relations_check");
  if (lambda0 == 0.0 || lambda0 == -1.0) throw InputError("p13: lambda0 must avoid {-1, 0}");
  if (alpha == Complex(0.0, 0.0)) throw InputError("p13: alpha must be nonzero");
  const double na2 = norm_sq(a), nb2 = norm_sq(b);
  const double al2 = std::norm(alpha);
  const double big_n = (1.0 + lambda0) * (1.0 + lambda0) * na2 + lambda0 * lambda0 * al2 * nb2;
  if (rel_defect(norm_sq((1.0 + lambda0) * a + (lambda0 * alpha) * b), big_n) > cfg.eps_opt) {
    throw HypothesisError("p13: norm identity at lambda0 does not hold");
  }
  P13Result out;
  const Complex ac = std::conj(alpha) * c_lim;
  const Complex lhs1 = a_lim * a_lim * (lambda0 + 1.0) + ac * lambda0;
  const Complex lhs2 = -b_lim * b_lim * al2 * lambda0 - ac * (lambda0 + 1.0);
  const double scale = std::max(std::abs(big_n), 1e-300);
  out.relation_residual = std::max(std::abs(lhs1 - big_n), std::abs(lhs2 - big_n)) / scale;
  out.relations_hold = out.relation_residual <= cfg.eps_opt;
  const double denom = al2 * lambda0 * (lambda0 + 1.0);
  for (const Complex lam : cfg.lambda_lattice) {
    const double bound =
        (big_n * (lambda0 * al2 - (lambda0 + 1.0) * std::norm(lam)) -
         ac.real() * std::norm(lambda0 * alpha - (lambda0 + 1.0) * lam)) /
        denom;
    const double value = norm_sq(a + lam * b);
    const double rel = (bound - value) / std::max(na2 + std::norm(lam) * nb2, 1e-300);
    out.bound_violation = std::max(out.bound_violation, rel);
  }
  return out;
}

}  // namespace modnorm
