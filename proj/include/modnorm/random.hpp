#pragma once

#include <cstdint>
#include <random>

#include "modnorm/linalg.hpp"

namespace modnorm {

using Rng = std::mt19937_64;

// SplitMix64 finalizer of (seed, index); used to derive independent per-case seeds.
std::uint64_t splitmix64(std::uint64_t seed, std::uint64_t index);

// Standard complex Gaussian entries.
Complex random_complex(Rng& rng);
ComplexMatrix random_complex_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols);
ComplexVector random_unit_vector(Rng& rng, Eigen::Index n);

// Haar-distributed unitary: QR of a Gaussian matrix with the phases of R's
// diagonal folded into Q.
ComplexMatrix random_unitary(Rng& rng, Eigen::Index n);

double uniform(Rng& rng, double lo, double hi);

}  // namespace modnorm
