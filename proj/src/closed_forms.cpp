#include "modnorm/closed_forms.hpp"

#include <cmath>
#include <random>

#include "modnorm/errors.hpp"

namespace modnorm {
namespace {

// Inner product linear in the first argument, as for z -> <z, y> x.
Complex ip(const ComplexVector& p, const ComplexVector& q) { return q.dot(p); }

}  // namespace

double fkm_norm(Complex a, Complex b, Complex c, Complex d, double norm_x) {
  if (!(norm_x >= 0.0)) throw InputError("fkm_norm: ||X|| must be non-negative");
  const double x2 = norm_x * norm_x;
  const double r = std::norm(a) + std::norm(d) + (std::norm(b) + std::norm(c)) * x2;
  const double s = 2.0 * std::abs(a * d - b * c * x2);
  double diff = r - s;
  if (diff < 0.0) {
    if (diff < -1e-9 * std::max(r, 1.0)) throw InputError("fkm_norm: r < s");
    diff = 0.0;
  }
  return (std::sqrt(diff) + std::sqrt(r + s)) / 2.0;
}

ComplexMatrix fkm_block(Complex a, Complex b, Complex c, Complex d, const ComplexMatrix& x) {
  require_square(x, "fkm_block");
  const Eigen::Index k = x.rows();
  ComplexMatrix m(2 * k, 2 * k);
  const ComplexMatrix id = ComplexMatrix::Identity(k, k);
  m.topLeftCorner(k, k) = a * id;
  m.topRightCorner(k, k) = b * x;
  m.bottomLeftCorner(k, k) = c * x.adjoint();
  m.bottomRightCorner(k, k) = d * id;
  return m;
}

double rank_one_norm(const RankOnePair& p, Complex lambda) {
  const double x2 = p.x.squaredNorm(), y2 = p.y.squaredNorm();
  const double u2 = p.u.squaredNorm(), v2 = p.v.squaredNorm();
  const double l2 = std::norm(lambda);
  const Complex ux = ip(p.u, p.x), yv = ip(p.y, p.v);
  // Sum and product of the two nonzero squared singular values.
  const double sum = x2 * y2 + l2 * u2 * v2 + 2.0 * (lambda * ux * yv).real();
  const double disc = sum * sum - 4.0 * l2 * x2 * y2 * u2 * v2 - 4.0 * l2 * std::norm(ux * yv) +
                      4.0 * l2 * x2 * u2 * std::norm(yv) + 4.0 * l2 * y2 * v2 * std::norm(ux);
  return std::sqrt(std::max((sum + std::sqrt(std::max(disc, 0.0))) / 2.0, 0.0));
}

bool linearly_dependent(const ComplexVector& u, const ComplexVector& v, double eps_eq) {
  const double uu = u.squaredNorm(), vv = v.squaredNorm();
  const double gram = uu * vv - std::norm(u.dot(v));
  return gram <= eps_eq * uu * vv;
}

RankOneVerdicts rank_one_classify(const RankOnePair& p, const ToleranceConfig& cfg) {
  RankOneVerdicts out;
  const double ax = p.x.norm() * p.y.norm();
  const double bx = p.u.norm() * p.v.norm();
  if (ax == 0.0 || bx == 0.0) {
    out = {true, true, true, true, true, true};
    return out;
  }
  const bool xu0 = std::abs(ip(p.x, p.u)) <= cfg.eps_eq * p.x.norm() * p.u.norm();
  const bool yv0 = std::abs(ip(p.y, p.v)) <= cfg.eps_eq * p.y.norm() * p.v.norm();
  const bool dep_xu = linearly_dependent(p.x, p.u, cfg.eps_eq);
  const bool dep_yv = linearly_dependent(p.y, p.v, cfg.eps_eq);
  out.bj_ab = out.bj_ba = out.roberts = xu0 || yv0;
  out.pythagoras = (dep_xu && yv0) || (dep_yv && xu0);
  out.parallelogram = dep_xu || dep_yv;
  out.inner_zero = xu0;
  return out;
}

BlockPair block_pair_e2(const ComplexMatrix& s, const ComplexMatrix& t, Complex lambda) {
  require_square(s, "block_pair_e2");
  require_same_shape(s, t, "block_pair_e2");
  const Eigen::Index k = s.rows();
  BlockPair out;
  out.a = ComplexMatrix::Zero(2 * k, 2 * k);
  out.b = ComplexMatrix::Zero(2 * k, 2 * k);
  out.a.topLeftCorner(k, k) = s;
  out.b.topRightCorner(k, k) = t;
  const ComplexMatrix g = s * s.adjoint() + std::norm(lambda) * (t * t.adjoint());
  out.norm = std::sqrt(std::max(hermitian_max_eigenvalue((g + g.adjoint()) / 2.0), 0.0));
  return out;
}

std::pair<ComplexMatrix, ComplexMatrix> shift_pair_e1(int m) {
  if (m < 1) throw InputError("shift_pair_e1: m must be positive");
  const int n = 2 * m + 2;
  ComplexMatrix a = ComplexMatrix::Zero(n, n);
  ComplexMatrix b = ComplexMatrix::Zero(n, n);
  // Basis e_1..e_n lives at indices 0..n-1.
  a(0, 0) = 0.5;
  b(0, 0) = 0.5;
  for (int k = 1; k <= m; ++k) {
    const double w = std::pow(2.0, -0.5 * k);
    a(1, 2 * k - 1) = w;
    b(1, 2 * k) = w;
  }
  return {a, b};
}

double shift_pair_e1_norm_sq(int m, Complex lambda) {
  const double l2 = std::norm(lambda);
  return std::max(std::norm(1.0 + lambda) / 4.0, (1.0 - std::ldexp(1.0, -m)) * (1.0 + l2));
}

std::pair<ComplexMatrix, ComplexMatrix> cont_pair_fixture(int n) {
  if (n < 2) throw InputError("cont_pair_fixture: N must be at least 2");
  ComplexMatrix f = ComplexMatrix::Zero(n, n);
  ComplexMatrix g = ComplexMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    const double t = static_cast<double>(j) / (n - 1);
    f(j, j) = std::max(0.5 - t, 0.0);
    g(j, j) = std::max(t - 0.5, 0.0);
  }
  return {f, g};
}

bool rank_persistence(const ComplexMatrix& a, const ComplexMatrix& b, Complex alpha1, Complex alpha2,
                      Complex alpha3, const ToleranceConfig& cfg) {
  require_same_shape(a, b, "rank_persistence");
  if (alpha1 == alpha2 || alpha1 == alpha3 || alpha2 == alpha3) {
    throw InputError("rank_persistence: the three alphas must be distinct");
  }
  for (const Complex al : {alpha1, alpha2, alpha3}) {
    if (numeric_rank(a + al * b, cfg.eps_rank) != 1) {
      throw InputError("rank_persistence: rank(A + alpha B) != 1 at a given alpha");
    }
  }
  std::mt19937_64 rng(cfg.rng_seed);
  std::normal_distribution<double> normal;
  for (int k = 0; k < 50; ++k) {
    const Complex al(normal(rng), normal(rng));
    if (numeric_rank(a + al * b, cfg.eps_rank) > 1) return false;
  }
  return true;
}

}  // namespace modnorm
