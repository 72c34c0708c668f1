#pragma once

#include <vector>

#include "locc/ntop.hpp"
#include "locc/state_set.hpp"

namespace locc {

/// Post-measurement residual set {M|phi_i>} for one outcome, kept
/// unnormalized; states the Kraus operator annihilates are flagged.
struct ResidualOutcome {
  int outcome = -1;
  StateSet residual;
  std::vector<bool> zero_flags;
};

ResidualOutcome apply_local_kraus(const StateSet& set, int party, const CMatrix& m,
                                  double tol = kDefaultTol);

struct SecondRoundOutcome {
  int outcome = 0;
  ResidualOutcome residual;
  std::vector<NtopReport> other_party_reports;  // parties != first, ascending
  bool any_feasible = false;
};

struct SecondRoundReport {
  int first_party = 0;
  std::vector<SecondRoundOutcome> outcomes;
  // False when some outcome leaves no NTOP-capable observer, which makes
  // the first measurement inappropriate for a distinguishing protocol.
  bool every_outcome_continues = true;
};

/// Residual feasibility analysis after a first local measurement. The
/// measurement must be orthogonality-preserving on the set.
SecondRoundReport second_round_report(const StateSet& set, int first_party,
                                      const LocalMeasurement& meas, double tol = kDefaultTol);

struct BobBranch {
  std::vector<CMatrix> projectors;     // onto normalized conditional states
  std::vector<int> state_for_outcome;  // aligned with projectors
  CMatrix remainder;                   // completes the branch measurement
  bool has_remainder = false;
};

/// One-way protocol on a 2 x n system: Alice measures her qubit with two
/// rank-one projectors, communicates the outcome, Bob finishes projectively.
struct OneWayProtocol {
  int alice_party = 0;
  int bob_party = 1;
  LocalMeasurement alice;
  std::vector<BobBranch> branches;  // per Alice outcome
};

OneWayProtocol one_way_protocol_2xn(const StateSet& set, double tol = kDefaultTol);

struct SimBranch {
  int alice_outcome = 0;
  int bob_outcome = 0;     // index into branch projectors; -1 for remainder
  double probability = 0.0;
  int identified = -1;     // state index announced on this branch
};

struct SimulationResult {
  std::vector<SimBranch> branches;
  bool success = false;        // every positive-probability branch is correct
  double prob_identified = 0;  // total probability of correct identification
};

/// Deterministic branch enumeration with exact probabilities (no sampling).
SimulationResult simulate_protocol(const OneWayProtocol& protocol, const StateSet& set,
                                   int state_index);

}  // namespace locc
