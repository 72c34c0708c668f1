#pragma once

#include <complex>
#include <random>
#include <vector>

#include "locc/eig.hpp"
#include "locc/gamma_delta.hpp"
#include "locc/hermitian.hpp"
#include "locc/matrix.hpp"
#include "locc/state_set.hpp"

namespace locc_test {

using locc::cx;
using locc::CMatrix;

inline CMatrix pauli_x() {
  CMatrix m(2);
  m(0, 1) = cx(1, 0);
  m(1, 0) = cx(1, 0);
  return m;
}

inline CMatrix pauli_y() {
  CMatrix m(2);
  m(0, 1) = cx(0, -1);
  m(1, 0) = cx(0, 1);
  return m;
}

inline CMatrix pauli_z() {
  CMatrix m(2);
  m(0, 0) = cx(1, 0);
  m(1, 1) = cx(-1, 0);
  return m;
}

inline locc::HermitianOp herm(const CMatrix& m) { return locc::HermitianOp::from(m); }

inline CMatrix scaled(double f, const CMatrix& m) { return cx(f, 0.0) * m; }

// Test-only partial-trace oracle: explicit multi-index enumeration over the
// full outer product, independent of the stride-based production kernel.
inline CMatrix naive_reduced_cross(const locc::StateSet& set, int m, int n, int party) {
  const auto& dims = set.dims();
  const int d = dims[party];
  CMatrix out(d);
  for (long im = 0; im < set.total_dim(); ++im) {
    const std::vector<int> mi = locc::amplitude_unflatten(im, dims);
    for (long in = 0; in < set.total_dim(); ++in) {
      const std::vector<int> ni = locc::amplitude_unflatten(in, dims);
      bool rest_match = true;
      for (int p = 0; p < set.num_parties(); ++p)
        if (p != party && mi[p] != ni[p]) rest_match = false;
      if (!rest_match) continue;
      out(mi[party], ni[party]) += set.state(m)[im] * std::conj(set.state(n)[in]);
    }
  }
  return out;
}

inline CMatrix random_hermitian(std::mt19937_64& rng, int d) {
  std::normal_distribution<double> g(0.0, 1.0);
  CMatrix m(d);
  for (int r = 0; r < d; ++r) {
    m(r, r) = cx(g(rng), 0.0);
    for (int c = r + 1; c < d; ++c) {
      m(r, c) = cx(g(rng), g(rng));
      m(c, r) = std::conj(m(r, c));
    }
  }
  return m;
}

// Haar-ish unitary: eigenvectors of a random Hermitian matrix.
inline CMatrix random_unitary(std::mt19937_64& rng, int d) {
  return locc::eig_hermitian(random_hermitian(rng, d)).vectors;
}

// Kronecker product of square matrices, test-side brute-force tool.
inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
  const int da = a.dim(), db = b.dim();
  CMatrix out(da * db);
  for (int ra = 0; ra < da; ++ra)
    for (int ca = 0; ca < da; ++ca)
      for (int rb = 0; rb < db; ++rb)
        for (int cb = 0; cb < db; ++cb)
          out(ra * db + rb, ca * db + cb) = a(ra, ca) * b(rb, cb);
  return out;
}

// Residual HS norm of op after projecting onto an orthonormalized basis
// (Tr(b b) = 2 convention). Used for span-equality checks.
inline double span_residual(const locc::HermitianOp& op,
                            const std::vector<locc::HermitianOp>& basis) {
  CMatrix v = op.matrix();
  for (int pass = 0; pass < 2; ++pass)
    for (const auto& b : basis) {
      double coeff = 0.0;
      for (int j = 0; j < v.dim(); ++j)
        for (int k = 0; k < v.dim(); ++k) coeff += (v(j, k) * b.matrix()(k, j)).real();
      v -= cx(coeff / 2.0, 0.0) * b.matrix();
    }
  return v.hs_norm();
}

}  // namespace locc_test
