#include "modnorm/tolerance.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "modnorm/errors.hpp"

namespace modnorm {

void ToleranceConfig::rebuild_lattice() {
  lambda_lattice.clear();
  const int phases = std::max(lattice_phases, 1);
  for (int k = -lattice_magnitude_exponent; k <= lattice_magnitude_exponent; ++k) {
    const double mag = std::ldexp(1.0, k);
    for (int p = 0; p < phases; ++p) {
      lambda_lattice.push_back(std::polar(mag, 2.0 * std::numbers::pi * p / phases));
    }
  }
  // Each random base point contributes its 8 images under z -> -z, conj, 1/z.
  std::mt19937_64 rng(rng_seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> log_mag(-3.0, 3.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  const int bases = (std::max(lattice_random_points, 0) + 7) / 8;
  for (int i = 0; i < bases; ++i) {
    const auto z = std::polar(std::exp(log_mag(rng)), phase(rng));
    for (const auto w : {z, std::conj(z), 1.0 / z, 1.0 / std::conj(z)}) {
      lambda_lattice.push_back(w);
      lambda_lattice.push_back(-w);
    }
  }
}

void ToleranceConfig::validate() const {
  if (!(eps_eq > 0) || !(eps_opt > 0) || !(eps_rank > 0)) {
    throw InputError("tolerances must be strictly positive");
  }
  if (phase_grid < 3) throw InputError("phase_grid must be at least 3");
  if (lambda_lattice.empty()) throw InputError("lambda lattice is empty");
  for (const auto z : lambda_lattice) {
    const bool has_negation = std::any_of(
        lambda_lattice.begin(), lambda_lattice.end(),
        [&](std::complex<double> w) { return std::abs(w + z) <= 1e-12 * (1.0 + std::abs(z)); });
    if (!has_negation) throw InputError("lambda lattice is not closed under negation");
  }
}

ToleranceConfig default_tolerances() {
  ToleranceConfig cfg;
  cfg.rebuild_lattice();
  return cfg;
}

}  // namespace modnorm
