#include "modnorm/norm_opt.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "modnorm/errors.hpp"
#include "modnorm/numerical_range.hpp"

namespace modnorm {
namespace {

constexpr double kInvPhi = 0.6180339887498949;

// Golden-section minimization of a convex function on [lo, hi].
template <typename F>
std::pair<double, double> golden_min(F&& f, double lo, double hi, double width) {
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > width) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = f(x2);
    }
  }
  return f1 <= f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

struct MData {
  ComplexMatrix a, b, g, k, l;
  double b_cut2 = 0.0;
};

MData make_mdata(const ComplexMatrix& a, const ComplexMatrix& b, double eps_rank) {
  MData d{a, b, a.adjoint() * a, a.adjoint() * b, b.adjoint() * b, 0.0};
  const double cut = eps_rank * spectral_norm(b);
  d.b_cut2 = cut * cut;
  return d;
}

double m_value(const MData& d, const ComplexVector& xi) {
  const ComplexVector ax = d.a * xi;
  const ComplexVector bx = d.b * xi;
  const double t = bx.squaredNorm();
  const double base = ax.squaredNorm();
  if (t <= d.b_cut2 || t == 0.0) return base;
  return std::max(base - std::norm(bx.dot(ax)) / t, 0.0);
}

// Euclidean gradient of M at xi (as a function of the real and imaginary parts).
ComplexVector m_gradient(const MData& d, const ComplexVector& xi) {
  const ComplexVector gx = d.g * xi;
  const ComplexVector lx = d.l * xi;
  const double t = xi.dot(lx).real();
  if (t <= d.b_cut2 || t == 0.0) return 2.0 * gx;
  const Complex s = xi.dot(d.k * xi);
  const ComplexVector kx = d.k * xi;
  const ComplexVector ksx = d.k.adjoint() * xi;
  return 2.0 * (gx - (std::conj(s) * kx + s * ksx) / t + (std::norm(s) / (t * t)) * lx);
}

void ascend(const MData& d, ComplexVector& xi, double& value, double scale) {
  double step = 0.5 / std::max(scale, 1e-300);
  for (int it = 0; it < 400; ++it) {
    ComplexVector g = m_gradient(d, xi);
    g -= xi.dot(g).real() * xi;
    const double gn = g.norm();
    if (gn <= 1e-13 * std::max(scale, 1e-300)) break;
    bool improved = false;
    for (int bt = 0; bt < 30; ++bt) {
      ComplexVector cand = xi + step * g;
      cand.normalize();
      const double v = m_value(d, cand);
      if (v > value) {
        xi = cand;
        const double gain = v - value;
        value = v;
        improved = true;
        step *= 2.0;
        if (gain <= 1e-16 * std::max(scale, 1e-300)) it = 400;
        break;
      }
      step *= 0.5;
    }
    if (!improved) break;
  }
}

ComplexVector top_right_singular_vector(const ComplexMatrix& a) {
  Eigen::JacobiSVD<ComplexMatrix> svd(a, Eigen::ComputeFullV);
  return svd.matrixV().col(0);
}

}  // namespace

MinLambdaResult min_lambda_norm(const ComplexMatrix& a, const ComplexMatrix& b,
                                const ToleranceConfig& cfg, std::optional<Complex> center) {
  require_same_shape(a, b, "min_lambda_norm");
  MinLambdaResult out;
  const double na = spectral_norm(a);
  const double nb = spectral_norm(b);
  if (nb == 0.0) {
    out.lambda_star = 0.0;
    out.value = na;
    out.iterations = 1;
    return out;
  }
  const Complex c0 = center.value_or(Complex(0.0, 0.0));
  const double radius = 1.0 + 2.0 * na / std::max(nb, cfg.eps_rank) + std::abs(c0);
  const double width = 1e-11 * radius;
  int evals = 0;
  auto f = [&](double re, double im) {
    ++evals;
    return spectral_norm(a + Complex(re, im) * b);
  };
  double best_im = 0.0;
  auto inner = [&](double re) {
    auto [im, v] = golden_min([&](double y) { return f(re, y); }, c0.imag() - radius,
                              c0.imag() + radius, width);
    best_im = im;
    return v;
  };
  auto [re, v] = golden_min(inner, c0.real() - radius, c0.real() + radius, width);
  inner(re);
  out.lambda_star = Complex(re, best_im);
  out.value = f(re, best_im);
  (void)v;
  // Never report worse than lambda = 0.
  if (na <= out.value) {
    out.lambda_star = 0.0;
    out.value = na;
  }
  out.iterations = evals;
  return out;
}

double M_functional(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexVector& xi,
                    const ToleranceConfig& cfg) {
  require_same_shape(a, b, "M_functional");
  if (xi.size() != a.cols()) throw InputError("M_functional: vector dimension mismatch");
  if (std::abs(xi.norm() - 1.0) > cfg.eps_eq) throw InputError("M_functional: xi is not a unit vector");
  return m_value(make_mdata(a, b, cfg.eps_rank), xi);
}

SupMResult sup_M(const ComplexMatrix& a, const ComplexMatrix& b, const ToleranceConfig& cfg) {
  require_same_shape(a, b, "sup_M");
  const Eigen::Index n = a.cols();
  const MData d = make_mdata(a, b, cfg.eps_rank);
  const double scale = std::max(d.g.norm() + d.l.norm(), 1e-300);
  const MinLambdaResult ml = min_lambda_norm(a, b, cfg);
  const ComplexMatrix c = a + ml.lambda_star * b;

  std::vector<ComplexVector> starts;
  // Maximizers from the convex side: xi in the top right singular subspace of
  // C = A + lambda* B with <C xi, B xi> = 0 gives M(xi) = ||C||^2.
  for (double rel : {1e-10, 1e-9, 1e-8, 1e-7}) {
    const ComplexMatrix v = top_right_singular_subspace(c, rel);
    const ComplexMatrix w = v.adjoint() * c.adjoint() * b * v;
    const double tol = 1e-12 * (1.0 + spectral_norm(c) * spectral_norm(b));
    if (auto eta = find_pure_state_near(w, Complex(0.0, 0.0), tol)) starts.push_back(v * *eta);
  }
  starts.push_back(top_right_singular_vector(a));
  starts.push_back(top_right_singular_vector(b));
  starts.push_back(top_right_singular_vector(c));
  std::mt19937_64 rng(cfg.rng_seed);
  std::normal_distribution<double> normal;
  for (int s = 0; s < 64; ++s) {
    ComplexVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = Complex(normal(rng), normal(rng));
    starts.push_back(v);
  }

  SupMResult best;
  best.value = -1.0;
  for (ComplexVector xi : starts) {
    const double nrm = xi.norm();
    if (!(nrm > 0.0) || !std::isfinite(nrm)) continue;
    xi /= nrm;
    double value = m_value(d, xi);
    ascend(d, xi, value, scale);
    if (value > best.value) {
      best.value = value;
      best.xi = xi;
    }
  }
  return best;
}

BjResult bj_orthogonal(const ComplexMatrix& x, const ComplexMatrix& y, const ToleranceConfig& cfg) {
  require_same_shape(x, y, "bj_orthogonal");
  BjResult out;
  if (spectral_norm(x) == 0.0) {
    out.orthogonal = true;
    out.witness = DensityState::pure(ComplexVector::Unit(x.cols(), 0));
    return out;
  }
  const SubspaceProjection p = maximizing_set(x.adjoint() * x, cfg);
  out.witness = witness_in_set_with_zero(p, x.adjoint() * y, cfg);
  out.orthogonal = out.witness.has_value();
  return out;
}

double min_modulus_sq(const ComplexMatrix& y) { return min_modulus(y.adjoint() * y); }

bool bj_lower_bound_check(const ComplexMatrix& x, const ComplexMatrix& y, const ToleranceConfig& cfg) {
  require_same_shape(x, y, "bj_lower_bound_check");
  const double nx2 = std::pow(spectral_norm(x), 2);
  const double ny2 = std::pow(spectral_norm(y), 2);
  const double m = min_modulus_sq(y);
  for (const Complex lam : cfg.lambda_lattice) {
    const double lhs = std::pow(spectral_norm(x + lam * y), 2);
    const double rhs = nx2 + std::norm(lam) * m;
    if (lhs < rhs - cfg.eps_opt * (nx2 + std::norm(lam) * ny2)) return false;
  }
  return true;
}

Alpha0Result unique_alpha0(const ComplexMatrix& x, const ComplexMatrix& y, const ToleranceConfig& cfg,
                           std::optional<Complex> center) {
  require_same_shape(x, y, "unique_alpha0");
  const double m = min_modulus_sq(y);
  if (!(m > cfg.eps_opt)) {
    throw HypothesisError("unique_alpha0 requires m(|y|^2) > eps_opt (got " + std::to_string(m) + ")");
  }
  const MinLambdaResult ml = min_lambda_norm(x, y, cfg, center);
  Alpha0Result out;
  out.alpha0 = ml.lambda_star;
  out.value = ml.value;
  const ComplexMatrix shifted = x + out.alpha0 * y;
  const double base = ml.value * ml.value;
  const double ny2 = std::pow(spectral_norm(y), 2);
  for (const Complex lam : cfg.lambda_lattice) {
    const double lhs = std::pow(spectral_norm(shifted + lam * y), 2);
    const double rhs = base + std::norm(lam) * m;
    const double shortfall = (rhs - lhs) / (base + std::norm(lam) * ny2 + 1e-300);
    out.shifted_bound_violation = std::max(out.shifted_bound_violation, shortfall);
  }
  out.shifted_bound_holds = out.shifted_bound_violation <= cfg.eps_opt;
  return out;
}

}  // namespace modnorm
