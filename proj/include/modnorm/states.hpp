#pragma once

#include <optional>

#include "modnorm/linalg.hpp"
#include "modnorm/tolerance.hpp"

namespace modnorm {

/// A state tr(rho .) on M_n, stored as its density matrix.
class DensityState {
 public:
  // Throws InputError unless rho is Hermitian, positive and of unit trace
  // within eps_eq. The stored matrix is symmetrized.
  explicit DensityState(const ComplexMatrix& rho, double eps_eq = kDefaultEpsEq);

  // xi xi* / ||xi||^2. Throws InputError for xi = 0.
  static DensityState pure(const ComplexVector& xi);
  static DensityState maximally_mixed(Eigen::Index n);

  const ComplexMatrix& rho() const { return rho_; }
  Eigen::Index dim() const { return rho_.rows(); }

 private:
  ComplexMatrix rho_;
};

// tr(rho a). Throws InputError on dimension mismatch.
Complex evaluate(const DensityState& phi, const ComplexMatrix& a);

/// Orthogonal projection given by an orthonormal basis of its range.
struct SubspaceProjection {
  ComplexMatrix basis;       // n x k, orthonormal columns
  ComplexMatrix projection;  // basis * basis*

  static SubspaceProjection from_basis(const ComplexMatrix& basis);
  static SubspaceProjection full(Eigen::Index n);
  Eigen::Index ambient_dim() const { return basis.rows(); }
  Eigen::Index rank() const { return basis.cols(); }
};

// Density states supported on the top eigenspace of positive p (eigenvalues
// within eps_eq * ||p|| of lambda_max). Throws InputError for p = 0 or p not
// positive.
SubspaceProjection maximizing_set(const ComplexMatrix& p, const ToleranceConfig& cfg);

// As maximizing_set, but p = 0 yields the whole space (every state attains 0).
SubspaceProjection maximizing_set_or_all(const ComplexMatrix& p, const ToleranceConfig& cfg);

struct IntersectionResult {
  bool intersects = false;
  std::optional<DensityState> witness;
  double sigma_max = 0.0;  // largest cosine of the principal angles
};

// Nonempty intersection iff sigma_max(P Q) >= 1 - eps_opt; the witness is the
// pure state on the normalized mean of the top principal vectors.
IntersectionResult sets_intersect(const SubspaceProjection& p, const SubspaceProjection& q,
                                  const ToleranceConfig& cfg);

// Orthonormal basis of the (numerical) intersection: principal vectors whose
// cosine is at least 1 - eps_opt. May have zero columns.
SubspaceProjection subspace_intersection(const SubspaceProjection& p, const SubspaceProjection& q,
                                         const ToleranceConfig& cfg);

// True iff ran(p) is contained in ran(q): every principal cosine >= 1 - eps_opt.
bool subspace_contained(const SubspaceProjection& p, const SubspaceProjection& q,
                        const ToleranceConfig& cfg);

// A pure state supported under P with |tr(rho c)| <= eps_opt * (1 + ||c||),
// or nullopt when 0 is not in the numerical range of c compressed to ran(P).
std::optional<DensityState> witness_in_set_with_zero(const SubspaceProjection& p,
                                                     const ComplexMatrix& c,
                                                     const ToleranceConfig& cfg);

}  // namespace modnorm
