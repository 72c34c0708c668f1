#pragma once

#include <stdexcept>

namespace locc {

// Default tolerance for rank decisions, orthogonality checks and POVM
// validation. Amplitudes are O(1), which leaves ample double headroom.
inline constexpr double kDefaultTol = 1e-9;

// Lower bound on POVM-element eigenvalues (positivity slack).
inline constexpr double kPsdTol = 1e-9;

// Max-norm tolerance for the idempotence test of rank-one candidates.
inline constexpr double kIdempotenceTol = 1e-8;

// Bad input: malformed documents, dimension mismatches, violated
// normalization constraints. CLI maps this to exit code 2.
struct input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A state set failed a mutual-orthogonality hypothesis, or a measurement
// is not orthogonality-preserving where it must be. CLI exit code 1.
struct orthogonality_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An NTOP measurement was requested where none exists. CLI exit code 1.
struct infeasible_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace locc
