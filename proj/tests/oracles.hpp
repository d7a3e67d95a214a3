#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the library's decision code.

#include <cmath>
#include <complex>
#include <random>

#include <Eigen/Dense>

namespace oracle {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Mat random_matrix(std::mt19937_64& rng, Eigen::Index r, Eigen::Index c) {
  std::normal_distribution<double> n(0.0, 1.0);
  Mat m(r, c);
  for (Eigen::Index j = 0; j < c; ++j)
    for (Eigen::Index i = 0; i < r; ++i) m(i, j) = Complex(n(rng), n(rng));
  return m;
}

inline Vec random_unit(std::mt19937_64& rng, Eigen::Index n) {
  Vec v = random_matrix(rng, n, 1);
  return v / v.norm();
}

// Largest singular value by power iteration on a* a.
inline double power_norm(const Mat& a, int iters = 3000) {
  if (a.size() == 0 || a.cwiseAbs().maxCoeff() == 0.0) return 0.0;
  const Mat g = a.adjoint() * a;
  Vec v = Vec::Ones(g.cols()) + Vec::LinSpaced(g.cols(), 0.1, 0.7).cast<Complex>() * Complex(0.0, 1.0);
  double lambda = 0.0;
  for (int k = 0; k < iters; ++k) {
    const Vec w = g * v;
    const double nw = w.norm();
    if (nw == 0.0) return 0.0;
    lambda = v.dot(w).real() / v.squaredNorm();
    v = w / nw;
  }
  return std::sqrt(std::max(lambda, 0.0));
}

// min over a square grid of |lambda| <= radius, refined around the best point.
inline double grid_min_norm(const Mat& a, const Mat& b, double radius, int grid = 81, int rounds = 30) {
  Complex center(0.0, 0.0);
  double half = radius, best = power_norm(a, 400);
  for (int r = 0; r < rounds; ++r) {
    Complex arg = center;
    for (int i = 0; i < grid; ++i) {
      for (int j = 0; j < grid; ++j) {
        const Complex l = center + Complex(-half + 2.0 * half * i / (grid - 1), -half + 2.0 * half * j / (grid - 1));
        const double v = Eigen::JacobiSVD<Mat>(a + l * b).singularValues()(0);
        if (v < best) {
          best = v;
          arg = l;
        }
      }
    }
    center = arg;
    half *= 4.0 / (grid - 1);
  }
  return best;
}

}  // namespace oracle
