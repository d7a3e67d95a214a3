#pragma once

#include <stdexcept>

namespace modnorm {

// Malformed input: shape mismatch, non-finite entries, zero scalars where
// nonzero ones are required.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A theorem's standing hypothesis does not hold for the given data.
class HypothesisError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace modnorm
