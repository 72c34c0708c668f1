#pragma once

#include "locc/ghz.hpp"
#include "locc/state_set.hpp"

namespace locc {

/// Nine orthogonal product states on a 3x3 system (domino construction)
/// that LOCC cannot distinguish.
StateSet case_bennett9();

/// Four three-qubit product states forming an unextendible product basis.
StateSet case_upb4();

/// Entangled variation of the four-state set, kept unnormalized:
/// phi2bar = sqrt(2) phi2 + phi4, phi4bar = phi2 - sqrt(2) phi4.
StateSet case_upb4_variation();

/// The three-state GHZ family for given parameters.
StateSet case_ghz3(const GhzFamilyParams& params);

/// Convenience parameters s = t = 1/sqrt(2), x3 = 1.
GhzFamilyParams default_ghz_params();

/// First k Bell states in the order Phi+, Phi-, Psi+, Psi-; k in 2..4.
StateSet case_bells(int k);

}  // namespace locc
