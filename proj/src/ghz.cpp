#include "locc/ghz.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "locc/cases.hpp"
#include "locc/eig.hpp"
#include "locc/protocol.hpp"

namespace locc {

namespace {

constexpr double kNormTol = 1e-12;

bool coeff_zero(const cx& z, double tol) { return std::abs(z) <= tol; }

// Other parties in frame order: the first listed one is gated by the
// second_residual condition, the other by the third_residual condition.
std::array<int, 2> remaining_parties(int first_party) {
  switch (first_party) {
    case 0:
      return {1, 2};
    case 1:
      return {0, 2};
    case 2:
      return {0, 1};
    default:
      throw input_error("ghz: party index out of range");
  }
}

// Keep samples far away from the decision threshold so that the closed-form
// conditions and the numerical rank computation cannot disagree on
// borderline values.
bool residual_is_clean(double r) { return r <= 1e-11 || r >= 1e-6; }

double phase_distance(double a, double b) {
  double d = std::fabs(a - b);
  while (d > M_PI) d = std::fabs(d - 2.0 * M_PI);
  return d;
}

}  // namespace

GhzFamilyParams GhzFamilyParams::make(cx s, cx t, const std::array<cx, 6>& x) {
  const double st_norm = std::norm(s) + std::norm(t);
  if (std::abs(st_norm - 1.0) > kNormTol)
    throw input_error("GhzFamilyParams: |s|^2 + |t|^2 must equal 1");
  double xs = 0.0;
  for (const cx& xi : x) xs += std::norm(xi);
  if (std::abs(xs - 1.0) > kNormTol)
    throw input_error("GhzFamilyParams: sum of |x_i|^2 must equal 1");
  if (std::abs(s) * std::abs(t) <= kNormTol)
    throw input_error("GhzFamilyParams: s*t must be nonzero");
  return GhzFamilyParams{s, t, x};
}

char to_char(GhzCase c) {
  switch (c) {
    case GhzCase::a:
      return 'A';
    case GhzCase::b:
      return 'B';
    case GhzCase::c:
      return 'C';
  }
  return '?';
}

std::array<cx, 6> ghz_frame_coefficients(const GhzFamilyParams& params, int first_party) {
  const auto& x = params.x;
  switch (first_party) {
    case 0:
      return x;
    case 1:  // order (b, a, c)
      return {x[2], x[3], x[0], x[1], x[4], x[5]};
    case 2:  // order (c, a, b)
      return {x[4], x[5], x[0], x[1], x[2], x[3]};
    default:
      throw input_error("ghz_frame_coefficients: party index out of range");
  }
}

HermitianOp ghz_alice_element(double p, cx offdiag) {
  if (p <= 0.0) throw input_error("ghz_alice_element: p must be positive");
  if (std::abs(offdiag) > p + 1e-12)
    throw input_error("ghz_alice_element: |offdiag| > p is not positive semidefinite");
  CMatrix e(2);
  e(0, 0) = cx(p, 0.0);
  e(1, 1) = cx(p, 0.0);
  e(0, 1) = offdiag;
  e(1, 0) = std::conj(offdiag);
  return HermitianOp::from(e);
}

GhzSample ghz_second_round_probe(const GhzFamilyParams& params, int first_party, double p,
                                 cx offdiag, double tol) {
  const std::array<cx, 6> f = ghz_frame_coefficients(params, first_party);
  const cx e01 = offdiag;             // <0|E|1>
  const cx e10 = std::conj(offdiag);  // <1|E|0>

  GhzSample sample;
  sample.first_party = first_party;
  sample.p = p;
  sample.offdiag = offdiag;
  sample.second_residual = std::max(std::abs(f[2] * p + f[5] * e01), std::abs(f[3] * p + f[4] * e10));
  sample.third_residual = std::max(std::abs(f[2] * e10 + f[5] * p), std::abs(f[3] * e01 + f[4] * p));

  const HermitianOp element = ghz_alice_element(p, offdiag);
  const StateSet set = case_ghz3(params);
  const ResidualOutcome res = apply_local_kraus(set, first_party, sqrt_psd(element), tol);
  const std::array<int, 2> others = remaining_parties(first_party);
  sample.second_feasible = ntop_check(res.residual, others[0], tol).feasible;
  sample.third_feasible = ntop_check(res.residual, others[1], tol).feasible;
  sample.consistent = (sample.second_feasible == (sample.second_residual <= kGhzResidualTol)) &&
                      (sample.third_feasible == (sample.third_residual <= kGhzResidualTol));
  return sample;
}

GhzVerdict ghz_family_verdict(const GhzFamilyParams& params, double tol, std::uint64_t seed) {
  const StateSet set = case_ghz3(params);
  GhzVerdict verdict;
  for (int p = 0; p < 3; ++p) {
    const NtopReport rep = ntop_check(set, p, tol);
    verdict.t_values[p] = rep.t;
    if (rep.feasible) verdict.feasible_parties.push_back(p);
  }

  // Case label in the first party's frame.
  const auto& x = params.x;
  if (!coeff_zero(x[0], tol) || !coeff_zero(x[1], tol)) {
    verdict.case_label = GhzCase::a;
    verdict.notes.push_back(
        "case A: x1 or x2 is nonzero, the first party cannot go first (t = 3)");
  } else {
    // Pivot: first nonzero among x3..x6; partners are x3<->x6 and x4<->x5.
    static constexpr int kPartner[4] = {3, 2, 1, 0};
    int pivot = -1;
    for (int i = 0; i < 4; ++i)
      if (!coeff_zero(x[2 + i], tol)) {
        pivot = i;
        break;
      }
    if (pivot < 0) throw input_error("ghz_family_verdict: x3..x6 all vanish");
    if (coeff_zero(x[2 + kPartner[pivot]], tol)) {
      verdict.case_label = GhzCase::b;
      verdict.notes.push_back(
          "case B: the pivot coefficient has a vanishing partner; any nontrivial outcome "
          "violates both continuation conditions, so no observer can measure second");
    } else {
      verdict.case_label = GhzCase::c;
      verdict.notes.push_back(
          "case C: pivot and partner coefficients are both nonzero; enabling outcomes force "
          "a common off-diagonal phase, which contradicts the completeness equation");
    }
  }

  // Falsification samples for every party that can go first.
  for (int party : verdict.feasible_parties) {
    GhzPartyEvidence ev;
    ev.party = party;
    std::mt19937_64 rng(seed ^ (0x100000001b3ULL * static_cast<std::uint64_t>(party + 1)));
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const std::array<cx, 6> f = ghz_frame_coefficients(params, party);

    auto push_probe = [&](double p, cx off) {
      GhzSample s = ghz_second_round_probe(params, party, p, off, tol);
      if (!residual_is_clean(s.second_residual) || !residual_is_clean(s.third_residual)) return;
      ev.samples.push_back(s);
      // The complementary element of the two-outcome measurement {E, I-E}.
      GhzSample s2 = ghz_second_round_probe(params, party, 1.0 - p, -off, tol);
      if (residual_is_clean(s2.second_residual) && residual_is_clean(s2.third_residual))
        ev.samples.push_back(s2);
    };

    // Random elements: p I + b_x sx + b_y sy with |b| < min(p, 1-p).
    for (int k = 0; k < 12; ++k) {
      const double p = 0.25 + 0.5 * unif(rng);
      const double bmag = 0.9 * std::min(p, 1.0 - p) * unif(rng);
      const double ang = 2.0 * M_PI * unif(rng);
      push_probe(p, std::polar(bmag, ang));
    }
    // Information-free direction (off-diagonal zero).
    for (int k = 0; k < 3; ++k) push_probe(0.3 + 0.1 * k, cx(0.0, 0.0));
    // Elements satisfying the closed-form conditions exactly, when positivity
    // and the second equation of the pair allow them.
    const double a3 = std::abs(f[2]), a4 = std::abs(f[3]), a5 = std::abs(f[4]),
                 a6 = std::abs(f[5]);
    if (a6 > 0.0 && a3 <= a6) {
      const double ratio = a3 / a6;
      const double p = 0.8 / (1.0 + ratio);
      const cx off = -(f[2] / f[5]) * p;
      if (std::abs(f[3] * p + f[4] * std::conj(off)) <= 1e-12 * std::max(1.0, p))
        push_probe(p, off);
    }
    if (a3 > 0.0 && a6 <= a3) {
      const double ratio = a6 / a3;
      const double p = 0.8 / (1.0 + ratio);
      const cx off = -(std::conj(f[5]) / std::conj(f[2])) * p;
      if (std::abs(f[3] * off + f[4] * p) <= 1e-12 * std::max(1.0, p)) push_probe(p, off);
    }
    if (a5 > 0.0 && a4 <= a5) {
      const double ratio = a4 / a5;
      const double p = 0.8 / (1.0 + ratio);
      const cx off = std::conj(-(f[3] / f[4]) * p);
      if (std::abs(f[2] * p + f[5] * off) <= 1e-12 * std::max(1.0, p)) push_probe(p, off);
    }

    for (const GhzSample& s : ev.samples)
      if (!s.consistent) ev.all_consistent = false;

    // Common-phase evidence: enabling elements with a nonzero off-diagonal.
    std::vector<double> phases;
    for (const GhzSample& s : ev.samples)
      if ((s.second_residual <= kGhzResidualTol || s.third_residual <= kGhzResidualTol) &&
          std::abs(s.offdiag) > 1e-12)
        phases.push_back(std::arg(s.offdiag));
    for (std::size_t i = 0; i < phases.size(); ++i)
      for (std::size_t j = i + 1; j < phases.size(); ++j)
        ev.enabling_phase_spread =
            std::max(ev.enabling_phase_spread, phase_distance(phases[i], phases[j]));

    verdict.notes.push_back("party " + std::to_string(party) + ": " +
                            std::to_string(ev.samples.size()) +
                            " sampled first-round elements, closed-form conditions " +
                            (ev.all_consistent ? "match" : "MISMATCH") +
                            " the numerical feasibility of the remaining parties");
    verdict.evidence.push_back(std::move(ev));
  }

  verdict.conclusion = Conclusion::locc_indistinguishable;
  return verdict;
}

}  // namespace locc
