#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "modnorm/linalg.hpp"
#include "modnorm/tolerance.hpp"

namespace modnorm {

/// Sampled boundary of the numerical range W(a).
struct RangeBoundary {
  std::vector<double> angles;
  std::vector<double> support_values;  // lambda_max(Re(e^{-i theta} a))
  std::vector<Complex> extreme_points;  // <xi, a xi> at the maximizing eigenvectors
};

// lambda_max(Re(e^{-i theta} a)) and a unit eigenvector attaining it.
std::pair<double, ComplexVector> support_function(const ComplexMatrix& a, double theta);

RangeBoundary range_boundary(const ComplexMatrix& a, const ToleranceConfig& cfg);

// Support-function membership test for z in W(a), tolerance eps_eq * (1 + ||a||).
bool range_contains(const ComplexMatrix& a, Complex z, const ToleranceConfig& cfg);

// Same test with an explicit absolute tolerance.
bool range_contains_tol(const ComplexMatrix& a, Complex z, double tol, int phase_grid);

// Unit vector eta with |<eta, a eta> - z| <= tol, or nullopt when z is
// separated from W(a) by more than tol. Built by convex-hull refinement of
// support points and exact 2x2 compressions (W of a 2x2 block is an ellipse).
std::optional<ComplexVector> find_pure_state_near(const ComplexMatrix& a, Complex z, double tol);

}  // namespace modnorm
