#include <doctest.h>

#include <cmath>
#include <random>

#include "locc/eig.hpp"
#include "locc/hermitian.hpp"
#include "support/helpers.hpp"

using namespace locc;
using namespace locc_test;

TEST_CASE("hs_inner matches the Pauli normalization") {
  const HermitianOp sx = herm(pauli_x());
  const HermitianOp sy = herm(pauli_y());
  const HermitianOp sz = herm(pauli_z());
  const HermitianOp id = herm(CMatrix::identity(2));
  CHECK(hs_inner(sx, sx) == doctest::Approx(2.0));
  CHECK(hs_inner(sx, sy) == doctest::Approx(0.0));
  CHECK(hs_inner(id, sz) == doctest::Approx(0.0));
  CHECK(hs_inner(sx, sy) == hs_inner(sy, sx));
  CHECK_THROWS_AS(hs_inner(sx, herm(CMatrix::identity(3))), input_error);
}

TEST_CASE("HermitianOp construction rejects non-Hermitian input") {
  CMatrix bad(2);
  bad(0, 1) = cx(1.0, 0.0);  // missing conjugate partner
  CHECK_THROWS_AS(HermitianOp::from(bad), input_error);
  CMatrix nan(2);
  nan(0, 0) = cx(std::nan(""), 0.0);
  CHECK_THROWS_AS(HermitianOp::from(nan), input_error);
}

TEST_CASE("gram_schmidt_hs drops dependent directions and renormalizes") {
  const HermitianOp sz = herm(pauli_z());
  const HermitianOp sx = herm(pauli_x());
  const HermitianOp sz2 = herm(scaled(2.0, pauli_z()));

  SUBCASE("duplicate direction discarded") {
    const auto out = gram_schmidt_hs({sz, sz2, sx});
    REQUIRE(out.size() == 2);
    CHECK(max_abs_diff(out[0].matrix(), pauli_z()) <= 1e-15);
    CHECK(max_abs_diff(out[1].matrix(), pauli_x()) <= 1e-15);
  }
  SUBCASE("empty input") { CHECK(gram_schmidt_hs({}).empty()); }
  SUBCASE("rescale to HS-norm^2 = 2") {
    const auto out = gram_schmidt_hs({herm(pauli_x() + pauli_y())});
    REQUIRE(out.size() == 1);
    const CMatrix expected = scaled(1.0 / std::sqrt(2.0), pauli_x() + pauli_y());
    CHECK(max_abs_diff(out[0].matrix(), expected) <= 1e-15);
  }
  SUBCASE("invalid tolerance") { CHECK_THROWS_AS(gram_schmidt_hs({sz}, 0.0), input_error); }
}

TEST_CASE("gram_schmidt_hs properties on random inputs") {
  std::mt19937_64 rng(1001);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 3);
    const int count = 1 + static_cast<int>(rng() % (2 * d * d));
    std::vector<HermitianOp> ops;
    std::vector<HermitianOp> pool;  // some inputs are combinations of others
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (int i = 0; i < count; ++i) {
      if (!pool.empty() && rng() % 3 == 0) {
        CMatrix combo(d);
        for (const auto& p : pool) combo += cx(unif(rng), 0.0) * p.matrix();
        ops.push_back(herm(combo));
      } else {
        ops.push_back(herm(random_hermitian(rng, d)));
      }
      pool.push_back(ops.back());
    }
    const auto out = gram_schmidt_hs(ops);
    CHECK(out.size() <= std::min<std::size_t>(ops.size(), static_cast<std::size_t>(d) * d));
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t j = i; j < out.size(); ++j) {
        const double target = (i == j) ? 2.0 : 0.0;
        CHECK(std::abs(hs_inner(out[i], out[j]) - target) <= 10 * kDefaultTol);
      }
    // Every input is reconstructible from the output span.
    for (const auto& op : ops)
      CHECK(span_residual(op, out) <= kDefaultTol * std::max(1.0, op.hs_norm()) * 10);
  }
}

TEST_CASE("hs_inner is positive definite up to tolerance") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    const HermitianOp a = herm(random_hermitian(rng, 3));
    CHECK(hs_inner(a, a) >= 0.0);
  }
  const HermitianOp zero = herm(CMatrix(2));
  CHECK(hs_inner(zero, zero) == doctest::Approx(0.0));
}

TEST_CASE("gell_mann_basis yields the Pauli matrices for d=2") {
  const GeneratorBasis g = gell_mann_basis(2);
  REQUIRE(g.ops.size() == 3);
  CHECK(max_abs_diff(g.ops[0].matrix(), pauli_x()) == 0.0);
  CHECK(max_abs_diff(g.ops[1].matrix(), pauli_y()) == 0.0);
  CHECK(max_abs_diff(g.ops[2].matrix(), pauli_z()) == 0.0);
}

TEST_CASE("gell_mann_basis invariants for d up to 5") {
  for (int d = 2; d <= 5; ++d) {
    const GeneratorBasis g = gell_mann_basis(d);
    REQUIRE(static_cast<int>(g.ops.size()) == d * d - 1);
    // make() revalidates tracelessness and Tr(G_m G_n) = 2 delta_mn.
    CHECK_NOTHROW(GeneratorBasis::make(d, g.ops));
  }
  CHECK_THROWS_AS(gell_mann_basis(1), input_error);
}

TEST_CASE("complete_to_generator_basis on Pauli examples") {
  const HermitianOp sx = herm(pauli_x());
  const HermitianOp sy = herm(pauli_y());
  const HermitianOp sz = herm(pauli_z());
  SUBCASE("complement of sigma_z") {
    const auto out = complete_to_generator_basis({sz}, 2);
    REQUIRE(out.size() == 2);
    CHECK(max_abs_diff(out[0].matrix(), pauli_x()) <= 1e-15);
    CHECK(max_abs_diff(out[1].matrix(), pauli_y()) <= 1e-15);
  }
  SUBCASE("empty partial gives the full basis") {
    const auto out = complete_to_generator_basis({}, 2);
    REQUIRE(out.size() == 3);
    CHECK(max_abs_diff(out[2].matrix(), pauli_z()) <= 1e-15);
  }
  SUBCASE("full partial gives nothing") {
    CHECK(complete_to_generator_basis({sx, sy, sz}, 2).empty());
  }
  SUBCASE("rejects non-orthonormalized partial") {
    CHECK_THROWS_AS(complete_to_generator_basis({herm(scaled(2.0, pauli_z()))}, 2), input_error);
    CHECK_THROWS_AS(complete_to_generator_basis({herm(CMatrix::identity(2))}, 2), input_error);
  }
}

TEST_CASE("completion plus partial passes the GeneratorBasis invariants") {
  std::mt19937_64 rng(314);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 3);
    // Random traceless starting set, orthonormalized.
    std::vector<HermitianOp> raw;
    const int count = 1 + static_cast<int>(rng() % (d * d - 1));
    for (int i = 0; i < count; ++i) {
      CMatrix m = random_hermitian(rng, d);
      const cx tr = m.trace();
      m -= cx(tr.real() / d, 0.0) * CMatrix::identity(d);
      raw.push_back(herm(m));
    }
    const auto partial = gram_schmidt_hs(raw);
    auto all = partial;
    for (auto& op : complete_to_generator_basis(partial, d)) all.push_back(op);
    CHECK_NOTHROW(GeneratorBasis::make(d, all));
  }
}

TEST_CASE("eig_hermitian reconstructs random matrices with unitary vectors") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 5);
    const CMatrix a = random_hermitian(rng, d);
    const EigenDecomposition e = eig_hermitian(a);
    REQUIRE(static_cast<int>(e.values.size()) == d);
    for (int i = 0; i + 1 < d; ++i) CHECK(e.values[i] <= e.values[i + 1]);
    CHECK(max_abs_diff(e.vectors.adjoint() * e.vectors, CMatrix::identity(d)) <= 1e-12);
    CMatrix recon(d);
    for (int k = 0; k < d; ++k)
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
          recon(r, c) += e.values[k] * e.vectors(r, k) * std::conj(e.vectors(c, k));
    CHECK(max_abs_diff(recon, a) <= 1e-10 * std::max(1.0, a.max_abs()));
  }
}

TEST_CASE("eig_hermitian agrees with the closed form for 2x2") {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix a = random_hermitian(rng, 2);
    const double mean = 0.5 * (a(0, 0).real() + a(1, 1).real());
    const double disc =
        std::sqrt(0.25 * std::pow(a(0, 0).real() - a(1, 1).real(), 2) + std::norm(a(0, 1)));
    const EigenDecomposition e = eig_hermitian(a);
    CHECK(e.values[0] == doctest::Approx(mean - disc).epsilon(1e-10));
    CHECK(e.values[1] == doctest::Approx(mean + disc).epsilon(1e-10));
  }
}

TEST_CASE("sqrt_psd squares back and rejects indefinite input") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 3);
    const CMatrix b = random_hermitian(rng, d);
    const HermitianOp psd = herm(b * b);  // B^2 with B Hermitian is PSD
    const CMatrix s = sqrt_psd(psd);
    CHECK(max_abs_diff(s * s, psd.matrix()) <= 1e-9 * std::max(1.0, psd.matrix().max_abs()));
    CHECK(min_eigenvalue(herm(s)) >= -1e-10);
  }
  CHECK_THROWS_AS(sqrt_psd(herm(scaled(-1.0, CMatrix::identity(2)))), input_error);
}
