#pragma once

#include <optional>
#include <utility>

#include "modnorm/linalg.hpp"
#include "modnorm/report.hpp"
#include "modnorm/states.hpp"
#include "modnorm/tolerance.hpp"

namespace modnorm {

// Module elements are n x m matrices with <x, y> = x* y in M_m; states act on M_m.

/// Result of a lambda-lattice quantified identity.
struct LatticeCheck {
  bool holds = false;
  double residual = 0.0;  // max relative defect over the lattice
};

// ||x + l y|| = ||x - l y||.
LatticeCheck roberts_lattice(const ComplexMatrix& x, const ComplexMatrix& y, const ToleranceConfig& cfg);
// ||x + l y||^2 + ||x - l y||^2 = 2 (||x||^2 + |l|^2 ||y||^2).
LatticeCheck parallelogram_lattice(const ComplexMatrix& x, const ComplexMatrix& y,
                                   const ToleranceConfig& cfg);
// ||x + l y||^2 = ||x||^2 + |l|^2 ||y||^2.
LatticeCheck pythagoras_lattice(const ComplexMatrix& x, const ComplexMatrix& y, const ToleranceConfig& cfg);

bool roberts_check(const ComplexMatrix& x, const ComplexMatrix& y, const ToleranceConfig& cfg);
bool parallelogram_law_check(const ComplexMatrix& x, const ComplexMatrix& y, const ToleranceConfig& cfg);

// Statements "i_norm_sum", "ii_numrange_square", "iii_numrange_inner".
OrthogonalityReport triangle_equality(const ComplexMatrix& x, const ComplexMatrix& y,
                                      const ToleranceConfig& cfg);

// ||a x + b y|| = a ||x|| + b ||y|| for a, b >= 0. Throws HypothesisError
// unless ||x + y|| = ||x|| + ||y||, InputError for negative scalars.
bool scaled_triangle_persistence(const ComplexMatrix& x, const ComplexMatrix& y, double alpha, double beta,
                                 const ToleranceConfig& cfg);

struct UnimodularResult {
  bool holds = false;
  Complex alpha_unit;
  Complex beta_unit;
};

// Throws InputError for alpha = 0 or beta = 0.
UnimodularResult unimodular_reduction(const ComplexMatrix& x, const ComplexMatrix& y, Complex alpha,
                                      Complex beta, const ToleranceConfig& cfg);

// Five equivalent statements on |x|^2 and |y|^2.
OrthogonalityReport c5_report(const ComplexMatrix& x, const ComplexMatrix& y, const ToleranceConfig& cfg);

// (||a*a + b*b|| = ||a||^2 + ||b||^2, ||a b*|| = ||a|| ||b||).
std::pair<bool, bool> c6_check(const ComplexMatrix& a, const ComplexMatrix& b, const ToleranceConfig& cfg);

OrthogonalityReport parallelogram_two_imply_third(const ComplexMatrix& x, const ComplexMatrix& y,
                                                  const ToleranceConfig& cfg);

struct TriangleWitness {
  DensityState phi;
  ComplexMatrix c;   // xi e1*, a contraction with phi(c* c) = 1
  Complex value;     // phi(c* a* b c)
};

// nullopt unless ||a + b|| = ||a|| + ||b|| within eps_opt.
std::optional<TriangleWitness> triangle_witness_construct(const ComplexMatrix& a, const ComplexMatrix& b,
                                                          const ToleranceConfig& cfg);

// Pythagoras identity under Re(x*y) <= 0. Throws HypothesisError otherwise.
OrthogonalityReport pythagoras_identity(const ComplexMatrix& x, const ComplexMatrix& y,
                                        const ToleranceConfig& cfg);

// Under Re(x*y) = 0 (and the stronger x*y = 0 branch). Throws HypothesisError otherwise.
OrthogonalityReport c36_check(const ComplexMatrix& x, const ComplexMatrix& y, const ToleranceConfig& cfg);

// Lattice definition "D"; when the rank and positivity gates hold, also the
// parallelogram-plus-witness characterization "W" and their agreement.
OrthogonalityReport pythagoras_orthogonal(const ComplexMatrix& x, const ComplexMatrix& y,
                                          const ToleranceConfig& cfg);

// Only the lattice definition, without derived properties.
bool pythagoras_verdict(const ComplexMatrix& x, const ComplexMatrix& y, const ToleranceConfig& cfg);

// For |y|^2 = alpha I with alpha > 0: (Pythagoras, BJ and parallelogram).
// Throws HypothesisError when |y|^2 is not a positive scalar.
std::pair<bool, bool> unital_bj_plus_parallelogram(const ComplexMatrix& x, const ComplexMatrix& y,
                                                   const ToleranceConfig& cfg);

struct P13Result {
  bool relations_hold = false;
  double relation_residual = 0.0;
  double bound_violation = 0.0;  // max relative violation of the lower bound on the lattice
};

// Algebraic limit relations for (a, b, c) where c = lim <A xi, B xi> (linear
// in the first slot), and the induced lower bound for ||A + l B||^2.
// Throws InputError for lambda0 in {-1, 0} or alpha = 0, HypothesisError
// when the norm identity at lambda0 fails.
P13Result p13_relations_check(const ComplexMatrix& a, const ComplexMatrix& b, double lambda0, Complex alpha,
                              double a_lim, double b_lim, Complex c_lim, const ToleranceConfig& cfg);

}  // namespace modnorm
