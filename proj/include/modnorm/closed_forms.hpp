#pragma once

#include <utility>

#include "modnorm/linalg.hpp"
#include "modnorm/tolerance.hpp"

namespace modnorm {

// Norm of the block operator [[aI, bX], [cX*, dI]], which depends on X only
// through ||X||:  (sqrt(r - s) + sqrt(r + s)) / 2 with
// r = |a|^2 + |d|^2 + (|b|^2 + |c|^2) ||X||^2 and s = 2 |ad - bc ||X||^2|.
double fkm_norm(Complex a, Complex b, Complex c, Complex d, double norm_x);

// [[aI, bX], [cX*, dI]] for square X.
ComplexMatrix fkm_block(Complex a, Complex b, Complex c, Complex d, const ComplexMatrix& x);

/// A = x (x) y and B = u (x) v, where (x (x) y)(z) = <z, y> x, i.e. x y*.
struct RankOnePair {
  ComplexVector x, y, u, v;

  ComplexMatrix a() const { return outer(x, y); }
  ComplexMatrix b() const { return outer(u, v); }
};

// Closed-form ||A + lambda B|| from the characteristic equation of the 2x2
// Gram compression.
double rank_one_norm(const RankOnePair& p, Complex lambda);

struct RankOneVerdicts {
  bool bj_ab = false;          // A orthogonal to B (Birkhoff-James)
  bool bj_ba = false;
  bool roberts = false;
  bool pythagoras = false;
  bool parallelogram = false;
  bool inner_zero = false;     // A* B = 0
};

// Exact verdicts from inner products and Gram-determinant dependence tests.
RankOneVerdicts rank_one_classify(const RankOnePair& p, const ToleranceConfig& cfg);

// {u, v} linearly dependent: Gram determinant <= eps_eq ||u||^2 ||v||^2.
bool linearly_dependent(const ComplexVector& u, const ComplexVector& v, double eps_eq);

struct BlockPair {
  ComplexMatrix a;  // [[S, 0], [0, 0]]
  ComplexMatrix b;  // [[0, T], [0, 0]]
  double norm = 0.0;  // ||A + lambda B|| = ||S S* + |lambda|^2 T T*||^{1/2}
};

BlockPair block_pair_e2(const ComplexMatrix& s, const ComplexMatrix& t, Complex lambda);

// (2m+2)-dimensional truncations of the weighted shift pair:
// A e1 = B e1 = e1/2, A e_{2k} = 2^{-k/2} e2, B e_{2k+1} = 2^{-k/2} e2, k = 1..m.
std::pair<ComplexMatrix, ComplexMatrix> shift_pair_e1(int m);

// max(|1 + lambda|^2 / 4, (1 - 2^{-m}) (1 + |lambda|^2)).
double shift_pair_e1_norm_sq(int m, Complex lambda);

// Diagonal samples of f = max(1/2 - t, 0) and g = max(t - 1/2, 0) on the
// uniform grid t_j = j / (N - 1).
std::pair<ComplexMatrix, ComplexMatrix> cont_pair_fixture(int n);

// Given rank(A + alpha_i B) = 1 at three distinct alpha_i, checks rank <= 1
// at 50 seeded random alpha. Throws InputError when the precondition fails.
bool rank_persistence(const ComplexMatrix& a, const ComplexMatrix& b, Complex alpha1, Complex alpha2,
                      Complex alpha3, const ToleranceConfig& cfg);

}  // namespace modnorm
