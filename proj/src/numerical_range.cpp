#include "modnorm/numerical_range.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

namespace modnorm {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kAngleWidth = 1e-6;

ComplexMatrix rotated_real_part(const ComplexMatrix& a, double theta) {
  const Complex w = std::polar(1.0, -theta);
  return (w * a + std::conj(w) * a.adjoint()) / 2.0;
}

double support_value(const ComplexMatrix& a, double theta) {
  return hermitian_max_eigenvalue(rotated_real_part(a, theta));
}

bool is_hermitian(const ComplexMatrix& a) {
  return (a - a.adjoint()).norm() <= 1e-14 * a.norm();
}

Complex quad_form(const ComplexMatrix& a, const ComplexVector& v) { return v.dot(a * v); }

double cross(Complex p, Complex q) { return p.real() * q.imag() - p.imag() * q.real(); }

// Nearest point to the origin on segment [p, q].
Complex nearest_on_segment(Complex p, Complex q) {
  const Complex d = q - p;
  const double len2 = std::norm(d);
  if (len2 == 0.0) return p;
  const double t = std::clamp(-(std::conj(d) * p).real() / len2, 0.0, 1.0);
  return p + t * d;
}

struct SupportPoint {
  Complex value;
  ComplexVector vec;
};

// For unit u, v with values pu, pv under b and mu on [pu, pv], a unit vector
// in span{u, v} whose value is mu.
ComplexVector solve_on_segment(const ComplexMatrix& b, const SupportPoint& u, const SupportPoint& v,
                               Complex mu) {
  const Complex d = v.value - u.value;
  const double scale = std::abs(u.value) + std::abs(v.value) + 1e-300;
  if (std::abs(mu - u.value) <= 1e-15 * scale || std::abs(d) <= 1e-15 * scale) return u.vec;
  if (std::abs(mu - v.value) <= 1e-15 * scale) return v.vec;
  const Complex omega = std::conj(d) / std::abs(d);
  const ComplexMatrix c =
      omega * (b - mu * ComplexMatrix::Identity(b.rows(), b.cols()));
  const ComplexMatrix h = (c + c.adjoint()) / 2.0;
  const ComplexMatrix k = (c - c.adjoint()) / Complex(0.0, 2.0);
  const double huu = quad_form(h, u.vec).real();
  const double hvv = quad_form(h, v.vec).real();
  const Complex huv = u.vec.dot(h * v.vec);
  const Complex kuv = u.vec.dot(k * v.vec);
  Complex phase(1.0, 0.0);
  if (std::abs(kuv) > 0.0) phase = Complex(0.0, 1.0) * std::conj(kuv) / std::abs(kuv);
  // hvv tau^2 + 2 beta tau + huu = 0 with huu <= 0 <= hvv.
  const double beta = (phase * huv).real();
  if (hvv <= 0.0) return v.vec;
  const double disc = std::max(beta * beta - hvv * huu, 0.0);
  const double tau = (beta >= 0.0) ? (-huu) / (beta + std::sqrt(disc)) : (-beta + std::sqrt(disc)) / hvv;
  ComplexVector eta = u.vec + (phase * tau) * v.vec;
  const double nrm = eta.norm();
  if (!(nrm > 0.0) || !std::isfinite(nrm)) return u.vec;
  return eta / nrm;
}

}  // namespace

std::pair<double, ComplexVector> support_function(const ComplexMatrix& a, double theta) {
  require_square(a, "support_function");
  const SpectralDecomposition eig = hermitian_eig(rotated_real_part(a, theta), 1e-6);
  return {eig.eigenvalues(0), eig.eigenvectors.col(0)};
}

RangeBoundary range_boundary(const ComplexMatrix& a, const ToleranceConfig& cfg) {
  require_square(a, "range_boundary");
  RangeBoundary out;
  const int m = std::max(cfg.phase_grid, 3);
  for (int k = 0; k < m; ++k) {
    const double theta = kTwoPi * k / m;
    auto [h, xi] = support_function(a, theta);
    out.angles.push_back(theta);
    out.support_values.push_back(h);
    out.extreme_points.push_back(quad_form(a, xi));
  }
  return out;
}

bool range_contains_tol(const ComplexMatrix& a, Complex z, double tol, int phase_grid) {
  require_square(a, "range_contains");
  if (is_hermitian(a)) {
    const double lo = hermitian_min_eigenvalue((a + a.adjoint()) / 2.0);
    const double hi = hermitian_max_eigenvalue((a + a.adjoint()) / 2.0);
    return std::abs(z.imag()) <= tol && z.real() >= lo - tol && z.real() <= hi + tol;
  }
  // z in W(a) iff g(theta) = h(theta) - Re(e^{-i theta} z) >= 0 for all theta.
  auto g = [&](double theta) {
    return support_value(a, theta) - (std::polar(1.0, -theta) * z).real();
  };
  const int m = std::max(phase_grid, 3);
  std::vector<double> vals(m);
  for (int k = 0; k < m; ++k) {
    vals[k] = g(kTwoPi * k / m);
    if (vals[k] < -tol) return false;
  }
  // Refine every grid-local minimum by golden-section search.
  const double step = kTwoPi / m;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int k = 0; k < m; ++k) {
    const double prev = vals[(k + m - 1) % m];
    const double next = vals[(k + 1) % m];
    if (vals[k] > prev || vals[k] > next) continue;
    double lo = kTwoPi * k / m - step;
    double hi = kTwoPi * k / m + step;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = g(x1);
    double f2 = g(x2);
    while (hi - lo > kAngleWidth) {
      if (std::min(f1, f2) < -tol) return false;
      if (f1 < f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - inv_phi * (hi - lo);
        f1 = g(x1);
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + inv_phi * (hi - lo);
        f2 = g(x2);
      }
    }
    if (std::min(f1, f2) < -tol) return false;
  }
  return true;
}

bool range_contains(const ComplexMatrix& a, Complex z, const ToleranceConfig& cfg) {
  return range_contains_tol(a, z, cfg.eps_eq * (1.0 + spectral_norm(a)), cfg.phase_grid);
}

std::optional<ComplexVector> find_pure_state_near(const ComplexMatrix& a, Complex z, double tol) {
  require_square(a, "find_pure_state_near");
  const Eigen::Index n = a.rows();
  const ComplexMatrix b = a - z * ComplexMatrix::Identity(n, n);
  std::map<double, SupportPoint> hull;
  auto add = [&](double theta) {
    theta = std::fmod(theta, kTwoPi);
    if (theta < 0) theta += kTwoPi;
    auto [h, xi] = support_function(b, theta);
    (void)h;
    const SupportPoint p{quad_form(b, xi), xi};
    hull[theta] = p;
    return p;
  };
  for (int k = 0; k < 16; ++k) add(kTwoPi * k / 16);

  for (int iter = 0; iter < 200; ++iter) {
    std::vector<SupportPoint> pts;
    pts.reserve(hull.size());
    for (const auto& [theta, p] : hull) pts.push_back(p);
    const std::size_t m = pts.size();

    for (const auto& p : pts) {
      if (std::abs(p.value) <= tol) return p.vec;
    }

    // Strictly inside the (counterclockwise) support polygon: fan triangulation from pts[0].
    bool inside = true;
    for (std::size_t k = 0; k < m && inside; ++k) {
      const Complex p = pts[k].value;
      const Complex q = pts[(k + 1) % m].value;
      if (std::abs(q - p) == 0.0) continue;
      if (cross(q - p, -p) <= 0.0) inside = false;
    }
    if (inside) {
      const Complex p0 = pts[0].value;
      for (std::size_t k = 1; k + 1 < m; ++k) {
        const Complex pk = pts[k].value;
        const Complex pk1 = pts[k + 1].value;
        const double c1 = cross(pk - p0, -p0);
        const double c2 = cross(pk1 - p0, -p0);
        if (c1 < 0.0 || c2 > 0.0) continue;
        // Intersection q of ray p0 -> 0 with edge [pk, pk1].
        const Complex dir = -p0;
        const Complex e = pk1 - pk;
        const double denom = cross(dir, e);
        if (denom == 0.0) continue;
        const double s = std::clamp(cross(dir, p0 - pk) / denom, 0.0, 1.0);
        const Complex q = pk + s * e;
        const ComplexVector w = solve_on_segment(b, pts[k], pts[k + 1], q);
        const SupportPoint wq{quad_form(b, w), w};
        const ComplexVector eta = solve_on_segment(b, pts[0], wq, Complex(0.0, 0.0));
        if (std::abs(quad_form(b, eta)) <= tol) return eta;
        break;
      }
    }

    // Nearest boundary point of the polygon.
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_k = 0;
    Complex best_q;
    for (std::size_t k = 0; k < m; ++k) {
      const Complex q = nearest_on_segment(pts[k].value, pts[(k + 1) % m].value);
      if (std::abs(q) < best) {
        best = std::abs(q);
        best_k = k;
        best_q = q;
      }
    }
    if (best <= tol) {
      const ComplexVector eta = solve_on_segment(b, pts[best_k], pts[(best_k + 1) % m], best_q);
      if (std::abs(quad_form(b, eta)) <= tol) return eta;
    }
    if (inside) {
      // Numerical trouble inside the hull: split the widest angular gap and retry.
      double gap_start = 0.0, gap = -1.0, prev = hull.rbegin()->first - kTwoPi;
      for (const auto& entry : hull) {
        if (entry.first - prev > gap) {
          gap = entry.first - prev;
          gap_start = prev;
        }
        prev = entry.first;
      }
      add(gap_start + gap / 2.0);
      continue;
    }
    // Outside the polygon: push a support point toward the origin.
    const double theta = std::arg(-best_q);
    const SupportPoint p = add(theta);
    const Complex dirn = std::polar(1.0, theta);
    const double gain = (std::conj(dirn) * p.value).real() - (std::conj(dirn) * best_q).real();
    if ((std::conj(dirn) * p.value).real() < -tol || gain <= 1e-16 * (1.0 + std::abs(best_q))) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace modnorm
