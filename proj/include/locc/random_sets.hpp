#pragma once

#include <random>
#include <vector>

#include "locc/state_set.hpp"

namespace locc {

/// Mutually orthogonal random states (Gaussian amplitudes, orthonormalized);
/// requires num_states <= total dimension.
StateSet random_orthogonal_set(std::mt19937_64& rng, const std::vector<int>& dims,
                               int num_states);

}  // namespace locc
