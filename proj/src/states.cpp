#include "modnorm/states.hpp"

#include <algorithm>
#include <cmath>

#include "modnorm/errors.hpp"
#include "modnorm/numerical_range.hpp"

namespace modnorm {

DensityState::DensityState(const ComplexMatrix& rho, double eps_eq) {
  require_square(rho, "density matrix");
  if (rho.size() == 0) throw InputError("density matrix is empty");
  if (!all_finite(rho)) throw InputError("density matrix has non-finite entries");
  if ((rho - rho.adjoint()).norm() > eps_eq * std::max(rho.norm(), 1.0)) {
    throw InputError("density matrix is not Hermitian");
  }
  rho_ = (rho + rho.adjoint()) / 2.0;
  if (std::abs(rho_.trace() - Complex(1.0, 0.0)) > eps_eq * rho_.rows()) {
    throw InputError("density matrix does not have unit trace");
  }
  if (hermitian_min_eigenvalue(rho_) < -eps_eq) throw InputError("density matrix is not positive");
}

DensityState DensityState::pure(const ComplexVector& xi) {
  const double nrm = xi.norm();
  if (!(nrm > 0.0)) throw InputError("pure state from zero vector");
  const ComplexVector u = xi / nrm;
  return DensityState(u * u.adjoint());
}

DensityState DensityState::maximally_mixed(Eigen::Index n) {
  if (n <= 0) throw InputError("state dimension must be positive");
  return DensityState(ComplexMatrix::Identity(n, n) / static_cast<double>(n));
}

Complex evaluate(const DensityState& phi, const ComplexMatrix& a) {
  if (a.rows() != phi.dim() || a.cols() != phi.dim()) {
    throw InputError("evaluate: state and operator dimensions differ");
  }
  // tr(rho a) without forming the product.
  return (phi.rho().transpose().array() * a.array()).sum();
}

SubspaceProjection SubspaceProjection::from_basis(const ComplexMatrix& basis) {
  return SubspaceProjection{basis, basis * basis.adjoint()};
}

SubspaceProjection SubspaceProjection::full(Eigen::Index n) {
  return from_basis(ComplexMatrix::Identity(n, n));
}

SubspaceProjection maximizing_set(const ComplexMatrix& p, const ToleranceConfig& cfg) {
  require_square(p, "maximizing_set");
  if (spectral_norm(p) == 0.0) throw InputError("maximizing_set: p = 0 (every state attains 0)");
  if (!psd_check(p, cfg.eps_eq)) throw InputError("maximizing_set: p is not positive");
  return SubspaceProjection::from_basis(top_eigenspace(p, cfg.eps_eq));
}

SubspaceProjection maximizing_set_or_all(const ComplexMatrix& p, const ToleranceConfig& cfg) {
  if (spectral_norm(p) == 0.0) return SubspaceProjection::full(p.rows());
  return maximizing_set(p, cfg);
}

namespace {

void require_same_ambient(const SubspaceProjection& p, const SubspaceProjection& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw InputError("subspaces live in different dimensions");
}

}  // namespace

IntersectionResult sets_intersect(const SubspaceProjection& p, const SubspaceProjection& q,
                                  const ToleranceConfig& cfg) {
  require_same_ambient(p, q);
  IntersectionResult out;
  if (p.rank() == 0 || q.rank() == 0) return out;
  const ComplexMatrix cross = p.basis.adjoint() * q.basis;
  Eigen::JacobiSVD<ComplexMatrix> svd(cross, Eigen::ComputeFullU | Eigen::ComputeFullV);
  out.sigma_max = svd.singularValues()(0);
  out.intersects = out.sigma_max >= 1.0 - cfg.eps_opt;
  if (out.intersects) {
    const ComplexVector xi = p.basis * svd.matrixU().col(0) + q.basis * svd.matrixV().col(0);
    out.witness = DensityState::pure(xi);
  }
  return out;
}

SubspaceProjection subspace_intersection(const SubspaceProjection& p, const SubspaceProjection& q,
                                         const ToleranceConfig& cfg) {
  require_same_ambient(p, q);
  if (p.rank() == 0 || q.rank() == 0) return SubspaceProjection::from_basis(ComplexMatrix(p.ambient_dim(), 0));
  const ComplexMatrix cross = p.basis.adjoint() * q.basis;
  Eigen::JacobiSVD<ComplexMatrix> svd(cross, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const RealVector& s = svd.singularValues();
  Eigen::Index k = 0;
  while (k < s.size() && s(k) >= 1.0 - cfg.eps_opt) ++k;
  if (k == 0) return SubspaceProjection::from_basis(ComplexMatrix(p.ambient_dim(), 0));
  const ComplexMatrix mean =
      (p.basis * svd.matrixU().leftCols(k) + q.basis * svd.matrixV().leftCols(k)) / 2.0;
  Eigen::HouseholderQR<ComplexMatrix> qr(mean);
  const ComplexMatrix basis =
      qr.householderQ() * ComplexMatrix::Identity(p.ambient_dim(), k);
  return SubspaceProjection::from_basis(basis);
}

bool subspace_contained(const SubspaceProjection& p, const SubspaceProjection& q,
                        const ToleranceConfig& cfg) {
  require_same_ambient(p, q);
  if (p.rank() == 0) return true;
  if (q.rank() < p.rank()) return false;
  const RealVector s = singular_values(q.basis.adjoint() * p.basis);
  return s.size() >= p.rank() && s(p.rank() - 1) >= 1.0 - cfg.eps_opt;
}

std::optional<DensityState> witness_in_set_with_zero(const SubspaceProjection& p,
                                                     const ComplexMatrix& c,
                                                     const ToleranceConfig& cfg) {
  require_square(c, "witness_in_set_with_zero");
  if (c.rows() != p.ambient_dim()) throw InputError("witness_in_set_with_zero: dimension mismatch");
  if (p.rank() == 0) return std::nullopt;
  const double tol = cfg.eps_opt * (1.0 + spectral_norm(c));
  const ComplexMatrix compressed = p.basis.adjoint() * c * p.basis;
  if (!range_contains_tol(compressed, Complex(0.0, 0.0), tol, cfg.phase_grid)) return std::nullopt;
  const auto eta = find_pure_state_near(compressed, Complex(0.0, 0.0), tol);
  if (!eta) return std::nullopt;
  DensityState witness = DensityState::pure(p.basis * *eta);
  if (std::abs(evaluate(witness, c)) > tol) return std::nullopt;
  return witness;
}

}  // namespace modnorm
