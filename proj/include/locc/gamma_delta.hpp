#pragma once

#include <vector>

#include "locc/hermitian.hpp"
#include "locc/state_set.hpp"

namespace locc {

/// Partial trace of the cross outer-product |phi_m><phi_n| over every party
/// except `party`: entry (a,b) = sum_rest phi_m[a,rest] * conj(phi_n[b,rest]).
CMatrix reduced_cross(const StateSet& set, int m, int n, int party, Exec exec = Exec::parallel);

struct GammaDeltaPair {
  int i;
  int j;
  HermitianOp gamma;  // R + R^dagger,      R = Tr_other(|phi_i><phi_j|)
  HermitianOp delta;  // i R - i R^dagger
};

struct GammaDeltaFamily {
  int party = 0;
  int dim = 0;
  std::vector<GammaDeltaPair> pairs;  // lexicographic (i, j), i < j

  const GammaDeltaPair& find(int i, int j) const;
};

/// Builds the Gamma/Delta operator family for one party over all state pairs.
GammaDeltaFamily gamma_delta(const StateSet& set, int party, Exec exec = Exec::parallel);

/// (M on `party`, identity elsewhere) applied to a flat amplitude vector.
std::vector<cx> apply_on_party(const std::vector<cx>& state, const std::vector<int>& dims,
                               int party, const CMatrix& m);

}  // namespace locc
