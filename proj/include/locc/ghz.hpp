#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "locc/ntop.hpp"

namespace locc {

/// Parameters of the three-state family: two orthogonal GHZ-like states
/// s|000> + t|111>, t*|000> - s*|111> and one arbitrary state from their
/// complementary subspace with coefficients x1..x6.
struct GhzFamilyParams {
  cx s;
  cx t;
  std::array<cx, 6> x;

  /// Validates |s|^2+|t|^2 = 1, sum |x_i|^2 = 1 (both to 1e-12) and s*t != 0.
  static GhzFamilyParams make(cx s, cx t, const std::array<cx, 6>& x);
};

/// Residual-condition threshold used when matching the closed-form second
/// round conditions against numerical feasibility.
inline constexpr double kGhzResidualTol = 1e-8;

enum class GhzCase { a, b, c };
char to_char(GhzCase c);

/// One probed first-round element E = p I + Re(off) sx - Im(off) sy on the
/// first party (off = <0|E|1>), with the residual values of the two
/// closed-form continuation conditions and the numerically determined
/// feasibility of the remaining parties.
struct GhzSample {
  int first_party = 0;
  double p = 0.0;
  cx offdiag;
  double second_residual = 0.0;  // continuation condition for the first remaining party
  double third_residual = 0.0;  // continuation condition for the second remaining party
  bool second_feasible = false;
  bool third_feasible = false;
  bool consistent = false;  // feasibility coincides with residual <= kGhzResidualTol
};

struct GhzPartyEvidence {
  int party = 0;
  std::vector<GhzSample> samples;
  bool all_consistent = true;
  // Largest angular spread among off-diagonal phases of enabling elements;
  // a common phase is what breaks the completeness equation in case C.
  double enabling_phase_spread = 0.0;
};

/// Machine-checkable verdict: the family is never LOCC-distinguishable.
/// The case label follows the first party's coefficients: (A) it cannot go
/// first; (B) pivot coefficient with vanishing partner, every nontrivial
/// outcome blocks both remaining parties; (C) pivot and partner both
/// nonzero, enabling outcomes share an off-diagonal phase and completeness
/// fails. Sampled first-round elements corroborate the analytic argument.
struct GhzVerdict {
  Conclusion conclusion = Conclusion::locc_indistinguishable;
  GhzCase case_label = GhzCase::a;
  std::array<int, 3> t_values{};
  std::vector<int> feasible_parties;
  std::vector<GhzPartyEvidence> evidence;
  std::vector<std::string> notes;
};

/// Family coefficients rewritten in the frame that makes `first_party` play
/// the role of the first observer.
std::array<cx, 6> ghz_frame_coefficients(const GhzFamilyParams& params, int first_party);

/// E = [[p, off],[conj(off), p]] as a measurement element candidate.
HermitianOp ghz_alice_element(double p, cx offdiag);

/// Applies one candidate element on `first_party`, checks the remaining two
/// parties on the residual set and evaluates the closed-form conditions.
GhzSample ghz_second_round_probe(const GhzFamilyParams& params, int first_party, double p,
                                 cx offdiag, double tol = kDefaultTol);

GhzVerdict ghz_family_verdict(const GhzFamilyParams& params, double tol = kDefaultTol,
                              std::uint64_t seed = 0x9e3779b97f4a7c15ULL);

}  // namespace locc
