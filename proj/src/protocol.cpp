#include "locc/protocol.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace locc {

namespace {

// Column extraction of the unit vector behind a rank-one projector, with a
// deterministic phase (largest diagonal entry made real positive).
std::vector<cx> projector_axis(const CMatrix& p, double tol) {
  const int d = p.dim();
  int best = 0;
  for (int j = 1; j < d; ++j)
    if (p(j, j).real() > p(best, best).real()) best = j;
  const double diag = p(best, best).real();
  if (diag <= tol) throw std::logic_error("projector_axis: projector is numerically zero");
  std::vector<cx> axis(d);
  const double inv = 1.0 / std::sqrt(diag);
  for (int i = 0; i < d; ++i) axis[i] = p(i, best) * inv;
  return axis;
}

}  // namespace

ResidualOutcome apply_local_kraus(const StateSet& set, int party, const CMatrix& m, double tol) {
  if (party < 0 || party >= set.num_parties())
    throw input_error("apply_local_kraus: party index out of range");
  if (m.dim() != set.local_dim(party))
    throw input_error("apply_local_kraus: operator dimension mismatch");

  std::vector<std::vector<cx>> residual;
  std::vector<bool> zero_flags;
  residual.reserve(set.num_states());
  for (int i = 0; i < set.num_states(); ++i) {
    residual.push_back(apply_on_party(set.state(i), set.dims(), party, m));
    zero_flags.push_back(vec_norm(residual.back()) <=
                         tol * std::max(1.0, vec_norm(set.state(i))));
  }
  return ResidualOutcome{-1, StateSet::make(set.dims(), std::move(residual), set.names()),
                         std::move(zero_flags)};
}

SecondRoundReport second_round_report(const StateSet& set, int first_party,
                                      const LocalMeasurement& meas, double tol) {
  if (meas.party() != first_party)
    throw input_error("second_round_report: measurement party does not match first_party");
  const PreservationReport pres = verify_orthogonality_preserving(meas, set, tol);
  if (!pres.ok)
    throw orthogonality_error(
        "second_round_report: measurement is not orthogonality-preserving on the set "
        "(worst scaled overlap " +
        std::to_string(pres.worst) + ")");

  SecondRoundReport rep;
  rep.first_party = first_party;
  for (int m = 0; m < meas.num_outcomes(); ++m) {
    SecondRoundOutcome outcome{m, apply_local_kraus(set, first_party, meas.kraus_for(m), tol),
                               {}, false};
    outcome.residual.outcome = m;
    for (int p = 0; p < set.num_parties(); ++p) {
      if (p == first_party) continue;
      outcome.other_party_reports.push_back(ntop_check(outcome.residual.residual, p, tol));
      if (outcome.other_party_reports.back().feasible) outcome.any_feasible = true;
    }
    if (!outcome.any_feasible) rep.every_outcome_continues = false;
    rep.outcomes.push_back(std::move(outcome));
  }
  return rep;
}

OneWayProtocol one_way_protocol_2xn(const StateSet& set, double tol) {
  if (set.num_parties() != 2)
    throw input_error("one_way_protocol_2xn: exactly two parties required");
  std::vector<int> qubit_parties;
  for (int p = 0; p < 2; ++p)
    if (set.local_dim(p) == 2) qubit_parties.push_back(p);
  if (qubit_parties.empty())
    throw input_error("one_way_protocol_2xn: one party must be a qubit (d = 2)");

  int alice = -1;
  NtopReport alice_report;
  for (int p : qubit_parties) {
    NtopReport rep = ntop_check(set, p, tol);
    if (rep.feasible) {
      alice = p;
      alice_report = std::move(rep);
      break;
    }
  }
  if (alice < 0)
    throw infeasible_error(
        "one_way_protocol_2xn: no qubit party admits an NTOP measurement (r = 0)");

  OneWayProtocol proto{alice, 1 - alice, projective_ntop_qubit(alice_report), {}};

  const int nbob = set.local_dim(proto.bob_party);
  const int nstates = set.num_states();
  for (int k = 0; k < proto.alice.num_outcomes(); ++k) {
    const std::vector<cx> axis = projector_axis(proto.alice.elements()[k].matrix(), tol);

    // Conditional (unnormalized) states on Bob's side: <alpha_k|phi_i>.
    std::vector<std::vector<cx>> cond(nstates, std::vector<cx>(nbob, cx(0.0, 0.0)));
    for (int i = 0; i < nstates; ++i) {
      const std::vector<cx>& phi = set.state(i);
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < nbob; ++b) {
          const long idx = (proto.alice_party == 0) ? a * static_cast<long>(nbob) + b
                                                    : b * 2L + a;
          cond[i][b] += std::conj(axis[a]) * phi[idx];
        }
    }

    // The measurement is orthogonality-preserving, so the reachable
    // conditional states must be pairwise orthogonal; anything else is an
    // internal contradiction, not a recoverable input problem.
    for (int i = 0; i < nstates; ++i)
      for (int j = i + 1; j < nstates; ++j) {
        const double scale = std::max(1.0, vec_norm(cond[i]) * vec_norm(cond[j]));
        if (std::abs(vec_inner(cond[i], cond[j])) > tol * scale)
          throw std::logic_error(
              "one_way_protocol_2xn: conditional states are not orthogonal on Bob's side");
      }

    BobBranch branch;
    CMatrix sum(nbob);
    for (int i = 0; i < nstates; ++i) {
      const double nrm = vec_norm(cond[i]);
      if (nrm <= tol * std::max(1.0, vec_norm(set.state(i)))) continue;
      std::vector<cx> unit = cond[i];
      for (cx& z : unit) z *= cx(1.0 / nrm, 0.0);
      branch.projectors.push_back(CMatrix::outer(unit, unit));
      branch.state_for_outcome.push_back(i);
      sum += branch.projectors.back();
    }
    branch.remainder = CMatrix::identity(nbob) - sum;
    branch.has_remainder = branch.remainder.trace().real() > 0.5;
    proto.branches.push_back(std::move(branch));
  }
  return proto;
}

SimulationResult simulate_protocol(const OneWayProtocol& protocol, const StateSet& set,
                                   int state_index) {
  if (set.num_parties() != 2)
    throw input_error("simulate_protocol: exactly two parties required");
  if (protocol.alice_party < 0 || protocol.alice_party > 1)
    throw input_error("simulate_protocol: invalid Alice party");
  if (set.local_dim(protocol.alice_party) != protocol.alice.dim())
    throw input_error("simulate_protocol: Alice dimension mismatch");
  if (protocol.branches.empty() ||
      set.local_dim(protocol.bob_party) !=
          (protocol.branches.front().projectors.empty()
               ? protocol.branches.front().remainder.dim()
               : protocol.branches.front().projectors.front().dim()))
    throw input_error("simulate_protocol: Bob dimension mismatch");
  if (state_index < 0 || state_index >= set.num_states())
    throw input_error("simulate_protocol: state index out of range");

  const std::vector<cx>& phi = set.state(state_index);
  const double total = vec_norm(phi) * vec_norm(phi);
  if (total <= 0.0) throw input_error("simulate_protocol: zero input state");

  SimulationResult result;
  for (int k = 0; k < protocol.alice.num_outcomes(); ++k) {
    const std::vector<cx> post =
        apply_on_party(phi, set.dims(), protocol.alice_party, protocol.alice.kraus_for(k));
    const double pk = vec_norm(post) * vec_norm(post) / total;
    if (pk <= 1e-12) continue;  // unreachable branch

    const BobBranch& branch = protocol.branches.at(k);
    const double post_sq = vec_norm(post) * vec_norm(post);
    double accounted = 0.0;
    for (std::size_t q = 0; q < branch.projectors.size(); ++q) {
      const std::vector<cx> after =
          apply_on_party(post, set.dims(), protocol.bob_party, branch.projectors[q]);
      const double pq = vec_norm(after) * vec_norm(after) / post_sq;
      accounted += pq;
      if (pq <= 1e-12) continue;
      result.branches.push_back(
          SimBranch{k, static_cast<int>(q), pk * pq, branch.state_for_outcome[q]});
    }
    const double rem = std::max(0.0, 1.0 - accounted);
    if (branch.has_remainder && rem > 1e-12)
      result.branches.push_back(SimBranch{k, -1, pk * rem, -1});
  }

  result.success = true;
  for (const SimBranch& b : result.branches) {
    if (b.identified == state_index) result.prob_identified += b.probability;
    if (b.probability > 1e-12 && b.identified != state_index) result.success = false;
  }
  return result;
}

}  // namespace locc
