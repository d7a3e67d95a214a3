#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "modnorm/linalg.hpp"
#include "modnorm/random.hpp"
#include "modnorm/report.hpp"
#include "modnorm/tolerance.hpp"

namespace modnorm::detail {

struct CaseInput {
  std::uint64_t seed;
  int index;
  const ToleranceConfig& cfg;
};

// Suite case reports hold only checks: a false statement is a failure.
inline void check(OrthogonalityReport& rep, const std::string& label, bool ok, double residual = 0.0) {
  rep.set(label, ok, residual);
  rep.require(ok, label);
}

// Folds a decider report's internal consistency into a case report.
inline void absorb(OrthogonalityReport& rep, const std::string& prefix, const OrthogonalityReport& inner) {
  if (inner.violations.empty()) {
    check(rep, prefix + "/consistent", true);
    return;
  }
  for (const auto& v : inner.violations) check(rep, prefix + ": " + v, false);
}

// u diag(s) v*.
inline ComplexMatrix with_singular_values(const ComplexMatrix& u, const RealVector& s, const ComplexMatrix& v) {
  return u * s.cast<Complex>().asDiagonal() * v.adjoint();
}

inline double rel_gap(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

inline Complex random_phase_scalar(Rng& rng, double lo, double hi) {
  return std::polar(uniform(rng, lo, hi), uniform(rng, 0.0, 6.283185307179586));
}

inline Complex lattice_pick(Rng& rng, const ToleranceConfig& cfg) {
  std::uniform_int_distribution<std::size_t> pick(0, cfg.lambda_lattice.size() - 1);
  return cfg.lambda_lattice[pick(rng)];
}

using CaseFn = void (*)(const CaseInput&, Rng&, OrthogonalityReport&);

void thraj_case(const CaseInput& in, Rng& rng, OrthogonalityReport& rep);
void c5_case(const CaseInput& in, Rng& rng, OrthogonalityReport& rep);
void e1_case(const CaseInput& in, Rng& rng, OrthogonalityReport& rep);
void e2_case(const CaseInput& in, Rng& rng, OrthogonalityReport& rep);
void e3_case(const CaseInput& in, Rng& rng, OrthogonalityReport& rep);
void e4_case(const CaseInput& in, Rng& rng, OrthogonalityReport& rep);
void t6_case(const CaseInput& in, Rng& rng, OrthogonalityReport& rep);
void t10_case(const CaseInput& in, Rng& rng, OrthogonalityReport& rep);
void t16_case(const CaseInput& in, Rng& rng, OrthogonalityReport& rep);
void l15_case(const CaseInput& in, Rng& rng, OrthogonalityReport& rep);
void properties_case(const CaseInput& in, Rng& rng, OrthogonalityReport& rep);

}  // namespace modnorm::detail
