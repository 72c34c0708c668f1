#pragma once

#include <string>
#include <vector>

#include "locc/gamma_delta.hpp"
#include "locc/hermitian.hpp"
#include "locc/state_set.hpp"

namespace locc {

/// Per-party feasibility report: t is the number of linearly independent
/// operators in the Gamma/Delta family (real span), r = d^2 - 1 - t, and a
/// nontrivial orthogonality-preserving measurement exists iff t < d^2 - 1.
struct NtopReport {
  int party = 0;
  int d = 0;
  int t = 0;
  int r = 0;
  bool feasible = false;
  std::vector<HermitianOp> lambda_basis;  // orthonormalized family span, length t
  std::vector<HermitianOp> complement;    // generators orthogonal to it, length r
};

/// A local measurement given by its POVM elements (positive, summing to the
/// identity) and optionally by explicit Kraus operators A_m with
/// A_m^dagger A_m = element m.
class LocalMeasurement {
 public:
  static LocalMeasurement make(int party, std::vector<HermitianOp> elements,
                               std::vector<CMatrix> kraus = {}, double tol = kDefaultTol);
  static LocalMeasurement identity(int party, int dim);

  int party() const { return party_; }
  int dim() const { return elements_.front().dim(); }
  int num_outcomes() const { return static_cast<int>(elements_.size()); }
  const std::vector<HermitianOp>& elements() const { return elements_; }
  bool has_kraus() const { return !kraus_.empty(); }
  /// Stored Kraus operator, or the principal square root of the element.
  CMatrix kraus_for(int m) const;

 private:
  LocalMeasurement() = default;
  int party_ = 0;
  std::vector<HermitianOp> elements_;
  std::vector<CMatrix> kraus_;
};

enum class Conclusion { locc_indistinguishable, one_way_distinguishable, inconclusive };
std::string to_string(Conclusion c);

struct CheckSummary {
  Conclusion conclusion = Conclusion::inconclusive;
  std::vector<int> feasible_parties;
  std::vector<NtopReport> reports;  // one per party, in party order
};

/// Feasibility test for one party. Refuses sets that are not mutually
/// orthogonal (the test is only meaningful for orthogonal sets).
NtopReport ntop_check(const StateSet& set, int party, double tol = kDefaultTol,
                      Exec exec = Exec::parallel);

/// All parties; the summary is locc_indistinguishable when nobody can make
/// an NTOP measurement, inconclusive otherwise.
CheckSummary ntop_check_all(const StateSet& set, double tol = kDefaultTol,
                            Exec exec = Exec::parallel);

/// Two-element NTOP POVM from a feasibility report: elements
/// I/2 +- (d/4) * s * sum_n dir_n lambda_n with s = sqrt(2/(d^2-d)), the
/// largest coefficient size that keeps both elements positive.
LocalMeasurement construct_ntop_povm(const NtopReport& report,
                                     const std::vector<double>& direction);
/// Canonical direction: the first complement generator.
LocalMeasurement construct_ntop_povm(const NtopReport& report);

/// Whether I/d + (1/2) sum_n b_n lambda_n is idempotent (a rank-one
/// projector, since its trace is one).
bool is_rank_one(const std::vector<double>& b, const std::vector<HermitianOp>& complement,
                 int d, double tol = kIdempotenceTol);

/// Rank-one projective NTOP measurement for a qubit party (d = 2), taking
/// b as the unit vector along the first complement generator.
LocalMeasurement projective_ntop_qubit(const NtopReport& report);

struct PreservationReport {
  bool ok = true;
  bool trivial = false;  // every element proportional to the identity
  double worst = 0.0;    // largest scaled |<phi_i| element |phi_j>|, i != j
  int worst_element = -1;
  int worst_i = -1;
  int worst_j = -1;
};

PreservationReport verify_orthogonality_preserving(const LocalMeasurement& meas,
                                                   const StateSet& set,
                                                   double tol = kDefaultTol);

/// Independent feasibility oracle: solves the real linear system
/// Tr(X Gamma_ij) = Tr(X Delta_ij) = 0 over Hermitian X by row reduction
/// with partial pivoting and reports whether a solution independent of the
/// identity exists.
bool ntop_oracle(const StateSet& set, int party, double tol = kDefaultTol);

}  // namespace locc
