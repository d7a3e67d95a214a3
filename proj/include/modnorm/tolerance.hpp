#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace modnorm {

inline constexpr double kDefaultEpsEq = 1e-9;
inline constexpr double kDefaultEpsOpt = 1e-6;
inline constexpr double kDefaultEpsRank = 1e-10;

/// Global numeric policy.
///
/// `lambda_lattice` is the finite stand-in for every "for all complex lambda"
/// quantifier. It is generated from the magnitude/phase/random parameters by
/// `rebuild_lattice()` and is closed under negation, conjugation and
/// inversion (z -> 1/z), so symmetric identities see symmetric samples.
struct ToleranceConfig {
  double eps_eq = kDefaultEpsEq;
  double eps_opt = kDefaultEpsOpt;
  double eps_rank = kDefaultEpsRank;
  int lattice_magnitude_exponent = 8;  // magnitudes 2^k, k = -K..K
  int lattice_phases = 24;
  int lattice_random_points = 64;
  int phase_grid = 360;
  std::uint64_t rng_seed = 42;
  std::vector<std::complex<double>> lambda_lattice;

  void rebuild_lattice();
  // Throws InputError when a tolerance is non-positive or the lattice is
  // empty or not closed under negation.
  void validate() const;
};

// Defaults with the lattice already built.
ToleranceConfig default_tolerances();

}  // namespace modnorm
