#include "modnorm/orthogonality.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "modnorm/errors.hpp"
#include "modnorm/norm_opt.hpp"
#include "modnorm/numerical_range.hpp"
#include "orthogonality_detail.hpp"

namespace modnorm {
namespace detail {

double rel_defect(double lhs, double rhs) {
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  return scale == 0.0 ? 0.0 : std::abs(lhs - rhs) / scale;
}

double norm_sq(const ComplexMatrix& a) {
  const double n = spectral_norm(a);
  return n * n;
}

// Relative gap between z and W(a): 0 inside, else the largest support
// violation on the angle grid over max(||a||, |z|).
double range_gap(const ComplexMatrix& a, Complex z, int phase_grid) {
  const double scale = std::max({spectral_norm(a), std::abs(z), 1e-300});
  double gap = 0.0;
  const int m = std::max(phase_grid, 3);
  for (int k = 0; k < m; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / m;
    const Complex w = std::polar(1.0, -theta);
    const ComplexMatrix h = (w * a + std::conj(w) * a.adjoint()) / 2.0;
    gap = std::max(gap, (w * z).real() - hermitian_max_eigenvalue(h));
  }
  return std::max(gap, 0.0) / scale;
}

bool contains_rel(const ComplexMatrix& a, Complex z, double eps, int phase_grid) {
  const double scale = std::max({spectral_norm(a), std::abs(z), 1e-300});
  return range_contains_tol(a, z, eps * scale, phase_grid);
}

bool nonpositive_real_part(const ComplexMatrix& c, double tol) {
  const ComplexMatrix h = (c + c.adjoint()) / 2.0;
  return hermitian_max_eigenvalue(h) <= tol;
}

// Validates phi(|x|^2) = ||x||^2 and phi(|y|^2) = ||y||^2 within 10 eps_opt.
bool witness_maximizes(const DensityState& phi, const ComplexMatrix& x, const ComplexMatrix& y,
                       const ToleranceConfig& cfg) {
  const double nx2 = norm_sq(x), ny2 = norm_sq(y);
  const double scale = std::max(nx2 + ny2, 1e-300);
  const double ex = std::abs(evaluate(phi, x.adjoint() * x) - nx2);
  const double ey = std::abs(evaluate(phi, y.adjoint() * y) - ny2);
  return ex <= 10.0 * cfg.eps_opt * scale && ey <= 10.0 * cfg.eps_opt * scale;
}

std::vector<std::pair<Complex, Complex>> sampled_scalar_pairs(const ToleranceConfig& cfg, int kind) {
  // kind 0: conj(a) b > 0; kind 1: conj(a) b real nonzero; kind 2: any nonzero.
  std::vector<std::pair<Complex, Complex>> out;
  const Complex w = std::polar(1.0, std::numbers::pi / 3.0);
  out.push_back({1.0, 1.0});
  out.push_back({2.0, 0.5});
  out.push_back({w, 3.0 * w});
  out.push_back({Complex(0.0, 0.25), Complex(0.0, 4.0)});
  if (kind >= 1) {
    out.push_back({1.0, -1.0});
    out.push_back({w, -0.5 * w});
  }
  if (kind == 2) {
    out.push_back({1.0, Complex(0.0, 1.0)});
    out.push_back({Complex(2.0, 1.0), Complex(-0.5, 3.0)});
  }
  std::mt19937_64 rng(cfg.rng_seed ^ 0x5ca1ab1eULL);
  std::uniform_real_distribution<double> logm(-2.0, 2.0), ph(0.0, 2.0 * std::numbers::pi);
  for (int k = 0; k < 4; ++k) {
    const Complex a = std::polar(std::exp(logm(rng)), ph(rng));
    double r = std::exp(logm(rng));
    if (kind >= 1 && k % 2 == 1) r = -r;
    Complex b = r * a / std::abs(a);
    if (kind == 2) b = std::polar(std::exp(logm(rng)), ph(rng));
    out.push_back({a, b});
  }
  return out;
}

}  // namespace detail

using namespace detail;

// ---------------------------------------------------------------------------
// Lattice-quantified identities.

namespace {

struct LatticeNorms {
  double nx2 = 0.0, ny2 = 0.0;
  std::vector<double> plus2, minus2;  // ||x + l y||^2, ||x - l y||^2
};

LatticeNorms lattice_norms(const ComplexMatrix& x, const ComplexMatrix& y, const ToleranceConfig& cfg,
                           bool with_minus) {
  require_same_shape(x, y, "lattice check");
  LatticeNorms out;
  out.nx2 = norm_sq(x);
  out.ny2 = norm_sq(y);
  for (const Complex lam : cfg.lambda_lattice) {
    out.plus2.push_back(norm_sq(x + lam * y));
    if (with_minus) out.minus2.push_back(norm_sq(x - lam * y));
  }
  return out;
}

}  // namespace

LatticeCheck roberts_lattice(const ComplexMatrix& x, const ComplexMatrix& y, const ToleranceConfig& cfg) {
  const LatticeNorms ln = lattice_norms(x, y, cfg, true);
  LatticeCheck out{true, 0.0};
  const double nx = std::sqrt(ln.nx2), ny = std::sqrt(ln.ny2);
  for (std::size_t k = 0; k < cfg.lambda_lattice.size(); ++k) {
    const double scale = nx + std::abs(cfg.lambda_lattice[k]) * ny;
    if (scale == 0.0) continue;
    const double r = std::abs(std::sqrt(ln.plus2[k]) - std::sqrt(ln.minus2[k])) / scale;
    out.residual = std::max(out.residual, r);
  }
  out.holds = out.residual <= cfg.eps_eq;
  return out;
}

LatticeCheck parallelogram_lattice(const ComplexMatrix& x, const ComplexMatrix& y,
                                   const ToleranceConfig& cfg) {
  const LatticeNorms ln = lattice_norms(x, y, cfg, true);
  LatticeCheck out{true, 0.0};
  for (std::size_t k = 0; k < cfg.lambda_lattice.size(); ++k) {
    const double rhs = 2.0 * (ln.nx2 + std::norm(cfg.lambda_lattice[k]) * ln.ny2);
    if (rhs == 0.0) continue;
    out.residual = std::max(out.residual, std::abs(ln.plus2[k] + ln.minus2[k] - rhs) / rhs);
  }
  out.holds = out.residual <= cfg.eps_eq;
  return out;
}

LatticeCheck pythagoras_lattice(const ComplexMatrix& x, const ComplexMatrix& y, const ToleranceConfig& cfg) {
  const LatticeNorms ln = lattice_norms(x, y, cfg, false);
  LatticeCheck out{true, 0.0};
  for (std::size_t k = 0; k < cfg.lambda_lattice.size(); ++k) {
    const double rhs = ln.nx2 + std::norm(cfg.lambda_lattice[k]) * ln.ny2;
    if (rhs == 0.0) continue;
    out.residual = std::max(out.residual, std::abs(ln.plus2[k] - rhs) / rhs);
  }
  out.holds = out.residual <= cfg.eps_eq;
  return out;
}

bool roberts_check(const ComplexMatrix& x, const ComplexMatrix& y, const ToleranceConfig& cfg) {
  return roberts_lattice(x, y, cfg).holds;
}

bool parallelogram_law_check(const ComplexMatrix& x, const ComplexMatrix& y, const ToleranceConfig& cfg) {
  return parallelogram_lattice(x, y, cfg).holds;
}

bool pythagoras_verdict(const ComplexMatrix& x, const ComplexMatrix& y, const ToleranceConfig& cfg) {
  require_same_shape(x, y, "pythagoras");
  const double nx2 = norm_sq(x), ny2 = norm_sq(y);
  for (const Complex lam : cfg.lambda_lattice) {
    const double rhs = nx2 + std::norm(lam) * ny2;
    if (rhs == 0.0) continue;
    if (std::abs(norm_sq(x + lam * y) - rhs) > cfg.eps_eq * rhs) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Triangle equalities.

OrthogonalityReport triangle_equality(const ComplexMatrix& x, const ComplexMatrix& y,
                                      const ToleranceConfig& cfg) {
  require_same_shape(x, y, "triangle_equality");
  OrthogonalityReport rep;
  rep.tolerances_used = cfg;
  const double nx = spectral_norm(x), ny = spectral_norm(y);
  const ComplexMatrix s = x + y;
  const ComplexMatrix s2 = s.adjoint() * s;
  const ComplexMatrix inner = x.adjoint() * y;
  const double target = (nx + ny) * (nx + ny);

  const double d1 = rel_defect(norm_sq(s), target);
  rep.set("i_norm_sum", d1 <= cfg.eps_eq, d1);
  rep.set("ii_numrange_square", contains_rel(s2, target, cfg.eps_eq, cfg.phase_grid),
          range_gap(s2, target, cfg.phase_grid));
  rep.set("iii_numrange_inner", contains_rel(inner, nx * ny, cfg.eps_eq, cfg.phase_grid),
          range_gap(inner, nx * ny, cfg.phase_grid));
  rep.require_agree({"i_norm_sum", "ii_numrange_square", "iii_numrange_inner"}, "triangle (i)<=>(ii)<=>(iii)");

  if (rep.verdict("i_norm_sum")) {
    // A maximizing vector of |x+y|^2, chosen inside that eigenspace to
    // maximize Re(x*y).
    const SubspaceProjection top = maximizing_set_or_all(s2, cfg);
    const ComplexMatrix re = top.basis.adjoint() * real_part(inner) * top.basis;
    const ComplexVector xi = top.basis * hermitian_eig(re, 1e-6).eigenvectors.col(0);
    const DensityState phi = DensityState::pure(xi);
    const double scale = std::max(target, 1e-300);
    const bool ok = witness_maximizes(phi, x, y, cfg) &&
                    std::abs(evaluate(phi, inner) - nx * ny) <= 10.0 * cfg.eps_opt * scale;
    rep.set("supplementary_state", ok, std::abs(evaluate(phi, inner) - nx * ny) / scale);
    rep.add_witness("supplementary_state", phi);
    rep.require(ok, "triangle witness lies in S_|x|^2 and S_|y|^2 with phi(x*y) = ||x|| ||y||");
  }
  rep.finalize();
  return rep;
}

bool scaled_triangle_persistence(const ComplexMatrix& x, const ComplexMatrix& y, double alpha, double beta,
                                 const ToleranceConfig& cfg) {
  require_same_shape(x, y, "scaled_triangle_persistence");
  if (alpha < 0.0 || beta < 0.0) throw InputError("scaled_triangle_persistence: scalars must be >= 0");
  const double nx = spectral_norm(x), ny = spectral_norm(y);
  if (rel_defect(spectral_norm(x + y), nx + ny) > cfg.eps_eq) {
    throw HypothesisError("scaled_triangle_persistence requires ||x+y|| = ||x|| + ||y||");
  }
  return rel_defect(spectral_norm(alpha * x + beta * y), alpha * nx + beta * ny) <= cfg.eps_eq;
}

UnimodularResult unimodular_reduction(const ComplexMatrix& x, const ComplexMatrix& y, Complex alpha,
                                      Complex beta, const ToleranceConfig& cfg) {
  require_same_shape(x, y, "unimodular_reduction");
  if (alpha == Complex(0.0, 0.0) || beta == Complex(0.0, 0.0)) {
    throw InputError("unimodular_reduction: scalars must be nonzero");
  }
  UnimodularResult out;
  const double nx = spectral_norm(x), ny = spectral_norm(y);
  if (rel_defect(spectral_norm(alpha * x + beta * y), std::abs(alpha) * nx + std::abs(beta) * ny) >
      cfg.eps_eq) {
    return out;
  }
  out.alpha_unit = alpha / std::abs(alpha);
  out.beta_unit = beta / std::abs(beta);
  out.holds = rel_defect(spectral_norm(out.alpha_unit * x + out.beta_unit * y), nx + ny) <= cfg.eps_eq;
  return out;
}

OrthogonalityReport c5_report(const ComplexMatrix& x, const ComplexMatrix& y, const ToleranceConfig& cfg) {
  require_same_shape(x, y, "c5_report");
  OrthogonalityReport rep;
  rep.tolerances_used = cfg;
  const ComplexMatrix px = x.adjoint() * x, py = y.adjoint() * y;
  const double nx2 = spectral_norm(px), ny2 = spectral_norm(py);

  const double d1 = rel_defect(spectral_norm(px + py), nx2 + ny2);
  rep.set("i_sum_norm", d1 <= cfg.eps_eq, d1);
  const double d2 = rel_defect(spectral_norm(modulus(x) * modulus(y)), std::sqrt(nx2 * ny2));
  rep.set("ii_modulus_product", d2 <= cfg.eps_eq, d2);
  const IntersectionResult meet = sets_intersect(maximizing_set_or_all(px, cfg), maximizing_set_or_all(py, cfg), cfg);
  rep.set("iii_states_intersect", meet.intersects, std::max(1.0 - meet.sigma_max, 0.0));
  const ComplexMatrix prod = px * py;
  rep.set("iv_numrange_product", contains_rel(prod, nx2 * ny2, cfg.eps_eq, cfg.phase_grid),
          range_gap(prod, nx2 * ny2, cfg.phase_grid));
  rep.set("v_numrange_sum", contains_rel(px + py, nx2 + ny2, cfg.eps_eq, cfg.phase_grid),
          range_gap(px + py, nx2 + ny2, cfg.phase_grid));
  rep.require_agree({"i_sum_norm", "ii_modulus_product", "iii_states_intersect", "iv_numrange_product",
                     "v_numrange_sum"},
                    "c5 five-way agreement");
  if (meet.witness) {
    rep.add_witness("iii_states_intersect", *meet.witness);
    rep.require(witness_maximizes(*meet.witness, x, y, cfg), "c5 witness maximizes |x|^2 and |y|^2");
  }
  rep.finalize();
  return rep;
}

std::pair<bool, bool> c6_check(const ComplexMatrix& a, const ComplexMatrix& b, const ToleranceConfig& cfg) {
  require_square(a, "c6_check");
  require_same_shape(a, b, "c6_check");
  const double na = spectral_norm(a), nb = spectral_norm(b);
  const bool first = rel_defect(spectral_norm(a.adjoint() * a + b.adjoint() * b), na * na + nb * nb) <= cfg.eps_eq;
  const bool second = rel_defect(spectral_norm(a * b.adjoint()), na * nb) <= cfg.eps_eq;
  return {first, second};
}

OrthogonalityReport parallelogram_two_imply_third(const ComplexMatrix& x, const ComplexMatrix& y,
                                                  const ToleranceConfig& cfg) {
  require_same_shape(x, y, "parallelogram_two_imply_third");
  OrthogonalityReport rep;
  rep.tolerances_used = cfg;
  const double nx2 = norm_sq(x), ny2 = norm_sq(y);
  const ComplexMatrix s = x + y, d = x - y;
  const double d1 = rel_defect(norm_sq(s) + norm_sq(d), 2.0 * (nx2 + ny2));
  rep.set("i_parallelogram", d1 <= cfg.eps_eq, d1);
  const IntersectionResult m2 = sets_intersect(maximizing_set_or_all(x.adjoint() * x, cfg),
                                               maximizing_set_or_all(y.adjoint() * y, cfg), cfg);
  rep.set("ii_states_xy", m2.intersects, std::max(1.0 - m2.sigma_max, 0.0));
  const IntersectionResult m3 = sets_intersect(maximizing_set_or_all(s.adjoint() * s, cfg),
                                               maximizing_set_or_all(d.adjoint() * d, cfg), cfg);
  rep.set("iii_states_sum_diff", m3.intersects, std::max(1.0 - m3.sigma_max, 0.0));
  const int count = int(rep.verdict("i_parallelogram")) + int(rep.verdict("ii_states_xy")) +
                    int(rep.verdict("iii_states_sum_diff"));
  rep.require(count != 2, "any two of (i),(ii),(iii) imply the third");
  if (m2.witness) rep.add_witness("ii_states_xy", *m2.witness);
  if (m3.witness) rep.add_witness("iii_states_sum_diff", *m3.witness);
  rep.finalize();
  return rep;
}

std::optional<TriangleWitness> triangle_witness_construct(const ComplexMatrix& a, const ComplexMatrix& b,
                                                          const ToleranceConfig& cfg) {
  require_square(a, "triangle_witness_construct");
  require_same_shape(a, b, "triangle_witness_construct");
  const double na = spectral_norm(a), nb = spectral_norm(b);
  if (rel_defect(spectral_norm(a + b), na + nb) > cfg.eps_opt) return std::nullopt;
  Eigen::JacobiSVD<ComplexMatrix> svd(a + b, Eigen::ComputeFullV);
  const ComplexVector xi = svd.matrixV().col(0);
  const Eigen::Index n = a.rows();
  ComplexMatrix c = xi * ComplexVector::Unit(n, 0).adjoint();
  const DensityState phi = DensityState::pure(ComplexVector::Unit(n, 0));
  const Complex value = evaluate(phi, c.adjoint() * a.adjoint() * b * c);
  return TriangleWitness{phi, c, value};
}

}  // namespace modnorm
