#include <doctest.h>

#include <cmath>
#include <random>

#include "locc/cases.hpp"
#include "locc/gamma_delta.hpp"
#include "locc/hermitian.hpp"
#include "locc/random_sets.hpp"
#include "locc/state_set.hpp"
#include "support/helpers.hpp"

using namespace locc;
using namespace locc_test;

namespace {

StateSet two_states(std::vector<cx> a, std::vector<cx> b, std::vector<int> dims) {
  return StateSet::make(std::move(dims), {std::move(a), std::move(b)});
}

}  // namespace

TEST_CASE("amplitude_index flattens row-major with party 0 most significant") {
  CHECK(amplitude_index({0, 0, 0}, {2, 2, 2}) == 0);
  CHECK(amplitude_index({1, 1, 1}, {2, 2, 2}) == 7);
  CHECK(amplitude_index({1, 0}, {2, 3}) == 3);
  CHECK_THROWS_AS(amplitude_index({2, 0}, {2, 3}), input_error);
  CHECK_THROWS_AS(amplitude_index({0}, {2, 3}), input_error);
}

TEST_CASE("amplitude_unflatten inverts amplitude_index") {
  const std::vector<int> dims{2, 3, 2};
  for (long idx = 0; idx < 12; ++idx)
    CHECK(amplitude_index(amplitude_unflatten(idx, dims), dims) == idx);
  CHECK_THROWS_AS(amplitude_unflatten(12, dims), input_error);
}

TEST_CASE("StateSet validation") {
  CHECK_THROWS_AS(StateSet::make({}, {{cx(1, 0)}}), input_error);
  CHECK_THROWS_AS(StateSet::make({2}, {}), input_error);
  CHECK_THROWS_AS(StateSet::make({2}, {{cx(1, 0)}}), input_error);  // wrong length
  CHECK_THROWS_AS(StateSet::make({2}, {{cx(1, 0), cx(std::nan(""), 0)}}), input_error);
}

TEST_CASE("check_mutual_orthogonality on simple sets") {
  SUBCASE("|00>, |01> is orthogonal") {
    const StateSet s = two_states({cx(1, 0), cx(0, 0), cx(0, 0), cx(0, 0)},
                                  {cx(0, 0), cx(1, 0), cx(0, 0), cx(0, 0)}, {2, 2});
    CHECK(check_mutual_orthogonality(s).ok);
  }
  SUBCASE("duplicate state is rejected with overlap 1") {
    const StateSet s = two_states({cx(1, 0), cx(0, 0)}, {cx(1, 0), cx(0, 0)}, {2});
    const auto rep = check_mutual_orthogonality(s);
    CHECK_FALSE(rep.ok);
    CHECK(rep.worst_overlap == doctest::Approx(1.0));
    CHECK(rep.worst_i == 0);
    CHECK(rep.worst_j == 1);
  }
  SUBCASE("the four-state example is orthogonal") {
    CHECK(check_mutual_orthogonality(case_upb4()).ok);
  }
}

TEST_CASE("reduced_cross on product and Bell states") {
  SUBCASE("product set, traced to the differing party") {
    // |0>_a |1>_b and |1>_a |1>_b
    const StateSet s = two_states({cx(0, 0), cx(1, 0), cx(0, 0), cx(0, 0)},
                                  {cx(0, 0), cx(0, 0), cx(0, 0), cx(1, 0)}, {2, 2});
    CMatrix expected(2);
    expected(0, 1) = cx(1, 0);  // |0><1|
    CHECK(max_abs_diff(reduced_cross(s, 0, 1, 0), expected) <= 1e-15);
    CHECK(reduced_cross(s, 0, 1, 1).max_abs() <= 1e-15);  // <1|0>_a kills it
  }
  SUBCASE("Bell pair gives sigma_z/2") {
    const StateSet s = case_bells(2);
    CHECK(max_abs_diff(reduced_cross(s, 0, 1, 0), scaled(0.5, pauli_z())) <= 1e-15);
    // Frozen value cross-checked against the index-by-index oracle.
    CHECK(max_abs_diff(naive_reduced_cross(s, 0, 1, 0), scaled(0.5, pauli_z())) <= 1e-15);
  }
  SUBCASE("index validation") {
    const StateSet s = case_bells(2);
    CHECK_THROWS_AS(reduced_cross(s, 0, 2, 0), input_error);
    CHECK_THROWS_AS(reduced_cross(s, 0, 1, 5), input_error);
  }
}

TEST_CASE("reduced_cross agrees with the naive oracle on random sets") {
  std::mt19937_64 rng(4242);
  const std::vector<std::vector<int>> shapes{{2, 2}, {3, 2}, {2, 3, 2}, {3, 3}, {2, 2, 2, 2}};
  for (const auto& dims : shapes) {
    const StateSet s = random_orthogonal_set(rng, dims, 3);
    for (int party = 0; party < static_cast<int>(dims.size()); ++party)
      for (int m = 0; m < 3; ++m)
        for (int n = 0; n < 3; ++n)
          CHECK(max_abs_diff(reduced_cross(s, m, n, party), naive_reduced_cross(s, m, n, party)) <=
                1e-13);
  }
}

TEST_CASE("reduced_cross structural properties") {
  std::mt19937_64 rng(31337);
  const StateSet s = random_orthogonal_set(rng, {2, 3, 2}, 4);
  for (int party = 0; party < 3; ++party)
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n) {
        const CMatrix rmn = reduced_cross(s, m, n, party);
        // Adjoint pairing.
        CHECK(max_abs_diff(rmn.adjoint(), reduced_cross(s, n, m, party)) <= 1e-14);
        // Trace recovers the full inner product <phi_n | phi_m>.
        const cx tr = rmn.trace();
        const cx ip = vec_inner(s.state(n), s.state(m));
        CHECK(std::abs(tr - ip) <= 1e-13);
      }
}

TEST_CASE("gamma_delta reproduces the worked operator values") {
  SUBCASE("GHZ pair with real amplitudes: Gamma_12 = 2st sigma_z, Delta_12 = 0") {
    const GhzFamilyParams p = GhzFamilyParams::make(
        cx(0.6, 0), cx(0.8, 0), {cx(0, 0), cx(0, 0), cx(1, 0), cx(0, 0), cx(0, 0), cx(0, 0)});
    const GammaDeltaFamily fam = gamma_delta(case_ghz3(p), 0);
    const auto& pair = fam.find(0, 1);
    CHECK(max_abs_diff(pair.gamma.matrix(), scaled(2 * 0.6 * 0.8, pauli_z())) <= 1e-15);
    CHECK(pair.delta.matrix().max_abs() <= 1e-15);
  }
  SUBCASE("four-state example, party a, pair (1,2)") {
    const GammaDeltaFamily fam = gamma_delta(case_upb4(), 0);
    const auto& pair = fam.find(0, 1);
    CHECK(max_abs_diff(pair.gamma.matrix(), scaled(0.5, pauli_x())) <= 1e-15);
    CHECK(max_abs_diff(pair.delta.matrix(), scaled(-0.5, pauli_y())) <= 1e-15);
  }
  SUBCASE("entangled variation, party b, pair (2,4)") {
    const GammaDeltaFamily fam = gamma_delta(case_upb4_variation(), 1);
    const auto& pair = fam.find(1, 3);
    const CMatrix expected = scaled(2.0 * std::sqrt(2.0), pauli_x()) + scaled(0.5, pauli_z());
    CHECK(max_abs_diff(pair.gamma.matrix(), expected) <= 1e-14);
  }
}

TEST_CASE("gamma_delta family members are Hermitian and traceless") {
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 15; ++trial) {
    const std::vector<int> dims{2 + static_cast<int>(rng() % 2), 2 + static_cast<int>(rng() % 2)};
    const StateSet s = random_orthogonal_set(rng, dims, 2 + static_cast<int>(rng() % 3));
    for (int party = 0; party < 2; ++party)
      for (const auto& pair : gamma_delta(s, party).pairs) {
        CHECK(max_abs_diff(pair.gamma.matrix(), pair.gamma.matrix().adjoint()) <= 1e-12);
        CHECK(max_abs_diff(pair.delta.matrix(), pair.delta.matrix().adjoint()) <= 1e-12);
        CHECK(std::abs(pair.gamma.trace()) <= kDefaultTol);
        CHECK(std::abs(pair.delta.trace()) <= kDefaultTol);
      }
  }
}

TEST_CASE("global phase rotates a Gamma/Delta pair within its span") {
  std::mt19937_64 rng(8080);
  for (int trial = 0; trial < 10; ++trial) {
    const StateSet s = random_orthogonal_set(rng, {2, 3}, 3);
    std::uniform_real_distribution<double> unif(0.0, 2.0 * M_PI);
    const cx phase = std::polar(1.0, unif(rng));
    std::vector<std::vector<cx>> rotated = s.states();
    for (cx& z : rotated[1]) z *= phase;
    const StateSet s2 = StateSet::make(s.dims(), rotated);

    for (int party = 0; party < 2; ++party) {
      std::vector<HermitianOp> ops1, ops2;
      for (const auto& p : gamma_delta(s, party).pairs) {
        ops1.push_back(p.gamma);
        ops1.push_back(p.delta);
      }
      for (const auto& p : gamma_delta(s2, party).pairs) {
        ops2.push_back(p.gamma);
        ops2.push_back(p.delta);
      }
      const auto basis1 = gram_schmidt_hs(ops1);
      const auto basis2 = gram_schmidt_hs(ops2);
      CHECK(basis1.size() == basis2.size());
      // Mutual containment of the spans, not entrywise equality.
      for (const auto& op : ops2) CHECK(span_residual(op, basis1) <= 1e-8);
      for (const auto& op : ops1) CHECK(span_residual(op, basis2) <= 1e-8);
    }
  }
}
