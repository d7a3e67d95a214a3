#include "modnorm/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "modnorm/errors.hpp"

namespace modnorm {
namespace {

ComplexMatrix checked_hermitian(const ComplexMatrix& h, double eps_eq) {
  require_square(h, "hermitian matrix");
  const double scale = h.norm();
  const double asym = (h - h.adjoint()).norm();
  if (asym > eps_eq * scale) {
    throw InputError("matrix is not Hermitian (asymmetry " + std::to_string(asym) + ")");
  }
  return (h + h.adjoint()) / 2.0;
}

bool is_diagonal(const ComplexMatrix& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i != j && a(i, j) != Complex(0.0, 0.0)) return false;
    }
  }
  return true;
}

}  // namespace

ComplexMatrix adjoint(const ComplexMatrix& a) { return a.adjoint(); }

ComplexMatrix real_part(const ComplexMatrix& a) {
  require_square(a, "real_part");
  return (a + a.adjoint()) / 2.0;
}

SpectralDecomposition hermitian_eig(const ComplexMatrix& h, double eps_eq) {
  const ComplexMatrix sym = checked_hermitian(h, eps_eq);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  const Eigen::Index n = sym.rows();
  SpectralDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  // Eigen returns ascending order.
  for (Eigen::Index k = 0; k < n; ++k) {
    out.eigenvalues(k) = solver.eigenvalues()(n - 1 - k);
    out.eigenvectors.col(k) = solver.eigenvectors().col(n - 1 - k);
  }
  return out;
}

double hermitian_max_eigenvalue(const ComplexMatrix& h) {
  if (h.rows() == 1) return h(0, 0).real();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(h.rows() - 1);
}

double hermitian_min_eigenvalue(const ComplexMatrix& h) {
  if (h.rows() == 1) return h(0, 0).real();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

ComplexMatrix modulus(const ComplexMatrix& x) {
  Eigen::JacobiSVD<ComplexMatrix> svd(x, Eigen::ComputeFullV);
  const Eigen::Index n = x.cols();
  RealVector s = RealVector::Zero(n);
  s.head(svd.singularValues().size()) = svd.singularValues();
  const ComplexMatrix& v = svd.matrixV();
  ComplexMatrix m = v * s.cast<Complex>().asDiagonal() * v.adjoint();
  return (m + m.adjoint()) / 2.0;
}

double spectral_norm(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  if (a.rows() == 1 || a.cols() == 1) return a.norm();
  if (is_diagonal(a)) {
    double best = 0.0;
    for (Eigen::Index k = 0; k < std::min(a.rows(), a.cols()); ++k) best = std::max(best, std::abs(a(k, k)));
    return best;
  }
  const ComplexMatrix gram = a.rows() >= a.cols() ? ComplexMatrix(a.adjoint() * a)
                                                  : ComplexMatrix(a * a.adjoint());
  return std::sqrt(std::max(hermitian_max_eigenvalue(gram), 0.0));
}

RealVector singular_values(const ComplexMatrix& a) {
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  return svd.singularValues();
}

double min_modulus(const ComplexMatrix& a) {
  require_square(a, "min_modulus");
  // The eigenvalues of |a| are the singular values of a.
  const RealVector s = singular_values(a);
  return s.size() == 0 ? 0.0 : s(s.size() - 1);
}

int numeric_rank(const ComplexMatrix& a, double eps_rank) {
  const RealVector s = singular_values(a);
  if (s.size() == 0 || s(0) == 0.0) return 0;
  const double cutoff = eps_rank * s(0);
  return static_cast<int>((s.array() > cutoff).count());
}

bool psd_check(const ComplexMatrix& h, double eps_eq) {
  const ComplexMatrix sym = checked_hermitian(h, eps_eq);
  const double scale = spectral_norm(sym);
  if (scale == 0.0) return true;
  return hermitian_min_eigenvalue(sym) >= -eps_eq * scale;
}

ComplexMatrix outer(const ComplexVector& x, const ComplexVector& y) { return x * y.adjoint(); }

bool all_finite(const ComplexMatrix& a) {
  for (Eigen::Index k = 0; k < a.size(); ++k) {
    const Complex z = a.data()[k];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InputError(std::string(what) + ": shape mismatch (" + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()) + ")");
  }
}

void require_square(const ComplexMatrix& a, const char* what) {
  if (a.rows() != a.cols()) throw InputError(std::string(what) + ": matrix must be square");
}

ComplexMatrix top_eigenspace(const ComplexMatrix& h, double rel_tol) {
  const SpectralDecomposition eig = hermitian_eig(h, std::max(rel_tol, kDefaultEpsEq));
  const double scale = eig.eigenvalues.cwiseAbs().maxCoeff();
  const double cut = eig.eigenvalues(0) - rel_tol * scale;
  Eigen::Index k = 0;
  while (k < eig.eigenvalues.size() && eig.eigenvalues(k) >= cut) ++k;
  return eig.eigenvectors.leftCols(k);
}

ComplexMatrix top_right_singular_subspace(const ComplexMatrix& a, double rel_tol) {
  Eigen::JacobiSVD<ComplexMatrix> svd(a, Eigen::ComputeFullV);
  const RealVector& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return svd.matrixV();
  Eigen::Index k = 0;
  while (k < s.size() && s(k) >= s(0) * (1.0 - rel_tol)) ++k;
  return svd.matrixV().leftCols(k);
}

}  // namespace modnorm
