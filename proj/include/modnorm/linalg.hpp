#pragma once

#include <complex>

#include <Eigen/Dense>

#include "modnorm/tolerance.hpp"

namespace modnorm {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Eigenpairs of a Hermitian matrix, eigenvalues in descending order.
struct SpectralDecomposition {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;  // orthonormal columns, aligned with eigenvalues
};

ComplexMatrix adjoint(const ComplexMatrix& a);

// (a + a*)/2. Throws InputError for non-square input.
ComplexMatrix real_part(const ComplexMatrix& a);

// Throws InputError when ||h - h*||_F > eps_eq * ||h||_F. Within tolerance
// the input is symmetrized before decomposition.
SpectralDecomposition hermitian_eig(const ComplexMatrix& h, double eps_eq = kDefaultEpsEq);

// Largest eigenvalue only; same Hermitian gate as hermitian_eig.
double hermitian_max_eigenvalue(const ComplexMatrix& h);
double hermitian_min_eigenvalue(const ComplexMatrix& h);

// |x| = (x*x)^{1/2}, computed from the SVD x = U S V* as V S V*.
ComplexMatrix modulus(const ComplexMatrix& x);

double spectral_norm(const ComplexMatrix& a);

// Descending singular values (Jacobi SVD, accurate for small values).
RealVector singular_values(const ComplexMatrix& a);

// lambda_min(|a|), the infimum of tr(rho |a|) over density matrices.
double min_modulus(const ComplexMatrix& a);

// Number of singular values above eps_rank * sigma_max.
int numeric_rank(const ComplexMatrix& a, double eps_rank = kDefaultEpsRank);

// True iff lambda_min(h) >= -eps_eq * ||h||. Throws InputError when h is not
// Hermitian within eps_eq.
bool psd_check(const ComplexMatrix& h, double eps_eq = kDefaultEpsEq);

// x y*, the operator z -> (y* z) x.
ComplexMatrix outer(const ComplexVector& x, const ComplexVector& y);

bool all_finite(const ComplexMatrix& a);

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what);
void require_square(const ComplexMatrix& a, const char* what);

// Orthonormal basis of the top eigenspace of Hermitian h: eigenvalues within
// rel_tol * max(|lambda|) of lambda_max.
ComplexMatrix top_eigenspace(const ComplexMatrix& h, double rel_tol);

// Top right singular subspace of a: singular values within rel_tol * sigma_max
// of sigma_max.
ComplexMatrix top_right_singular_subspace(const ComplexMatrix& a, double rel_tol);

}  // namespace modnorm
