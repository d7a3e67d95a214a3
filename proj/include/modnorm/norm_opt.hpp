#pragma once

#include <optional>

#include "modnorm/linalg.hpp"
#include "modnorm/states.hpp"
#include "modnorm/tolerance.hpp"

namespace modnorm {

struct MinLambdaResult {
  Complex lambda_star;
  double value = 0.0;  // ||A + lambda_star B||
  int iterations = 0;  // norm evaluations
  bool certified_convex = true;
};

// min over complex lambda of ||A + lambda B||. lambda -> ||A + lambda B|| is
// convex, so a nested golden-section search over a box that provably holds
// the minimizer (|lambda*| <= 2||A||/||B||) finds the global minimum. `center`
// shifts the search box, which is only useful to test uniqueness.
MinLambdaResult min_lambda_norm(const ComplexMatrix& a, const ComplexMatrix& b,
                                const ToleranceConfig& cfg,
                                std::optional<Complex> center = std::nullopt);

// ||A xi||^2 - |<A xi, B xi>|^2 / ||B xi||^2, or ||A xi||^2 when
// ||B xi|| <= eps_rank ||B||. Throws InputError unless ||xi|| = 1 within eps_eq.
double M_functional(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexVector& xi,
                    const ToleranceConfig& cfg);

struct SupMResult {
  double value = 0.0;
  ComplexVector xi;
};

// sup of M_functional over the unit sphere by multistart projected ascent.
SupMResult sup_M(const ComplexMatrix& a, const ComplexMatrix& b, const ToleranceConfig& cfg);

struct BjResult {
  bool orthogonal = false;
  std::optional<DensityState> witness;
};

// x orthogonal to y in the Birkhoff-James sense, decided by a state in
// S_{|x|^2} annihilating x*y. x = 0 is orthogonal to everything.
BjResult bj_orthogonal(const ComplexMatrix& x, const ComplexMatrix& y, const ToleranceConfig& cfg);

// ||x + lambda y||^2 >= ||x||^2 + |lambda|^2 m(|y|^2) on the lambda lattice,
// with slack eps_opt * (||x||^2 + |lambda|^2 ||y||^2).
bool bj_lower_bound_check(const ComplexMatrix& x, const ComplexMatrix& y, const ToleranceConfig& cfg);

// m(|y|^2) = lambda_min(y* y).
double min_modulus_sq(const ComplexMatrix& y);

struct Alpha0Result {
  Complex alpha0;
  double value = 0.0;          // ||x + alpha0 y||
  double shifted_bound_violation = 0.0;  // max relative shortfall of the shifted bound on the lattice
  bool shifted_bound_holds = false;
};

// The unique minimizer of alpha -> ||x + alpha y||. Throws HypothesisError
// unless m(|y|^2) > eps_opt.
Alpha0Result unique_alpha0(const ComplexMatrix& x, const ComplexMatrix& y, const ToleranceConfig& cfg,
                           std::optional<Complex> center = std::nullopt);

}  // namespace modnorm
