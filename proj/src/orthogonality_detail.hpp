#pragma once

#include <utility>
#include <vector>

#include "modnorm/linalg.hpp"
#include "modnorm/states.hpp"
#include "modnorm/tolerance.hpp"

namespace modnorm::detail {

// |lhs - rhs| / max(|lhs|, |rhs|), 0 when both vanish.
double rel_defect(double lhs, double rhs);
double norm_sq(const ComplexMatrix& a);
double range_gap(const ComplexMatrix& a, Complex z, int phase_grid);
// Membership with tolerance eps * max(||a||, |z|).
bool contains_rel(const ComplexMatrix& a, Complex z, double eps, int phase_grid);
// lambda_max(Re c) <= tol.
bool nonpositive_real_part(const ComplexMatrix& c, double tol);
bool witness_maximizes(const DensityState& phi, const ComplexMatrix& x, const ComplexMatrix& y,
                       const ToleranceConfig& cfg);
// Deterministic scalar pairs: kind 0 has conj(a) b > 0, kind 1 conj(a) b real
// nonzero, kind 2 arbitrary nonzero.
std::vector<std::pair<Complex, Complex>> sampled_scalar_pairs(const ToleranceConfig& cfg, int kind);

}  // namespace modnorm::detail
