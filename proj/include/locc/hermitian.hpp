#pragma once

#include <vector>

#include "locc/matrix.hpp"

namespace locc {

/// Hermitian operator on a small Hilbert space. Construction verifies
/// A = A^dagger to tolerance and stores the exactly symmetrized matrix.
class HermitianOp {
 public:
  static HermitianOp from(const CMatrix& m, double tol = kDefaultTol);

  const CMatrix& matrix() const { return m_; }
  int dim() const { return m_.dim(); }
  double trace() const { return m_.trace().real(); }
  double hs_norm() const { return m_.hs_norm(); }
  bool traceless(double tol = kDefaultTol) const;

 private:
  explicit HermitianOp(CMatrix m) : m_(std::move(m)) {}
  CMatrix m_;
};

/// Hilbert-Schmidt inner product Tr(A B); real for Hermitian arguments.
double hs_inner(const HermitianOp& a, const HermitianOp& b);

/// Orthogonal SU(d) generator set: d^2-1 traceless Hermitian operators
/// with Tr(G_m G_n) = 2 delta_mn.
struct GeneratorBasis {
  int dim = 0;
  std::vector<HermitianOp> ops;

  /// Validates the invariants (tracelessness and pairwise normalization).
  static GeneratorBasis make(int dim, std::vector<HermitianOp> ops, double tol = kDefaultTol);
};

/// Orthonormalizes a list of Hermitian operators in the real Hilbert-Schmidt
/// geometry. Outputs satisfy Tr(L_m L_n) = 2 delta_mn; inputs whose residual
/// falls below tol * max(1, ||input||_HS) are dropped, so the output length
/// is the numerical rank of the input span.
std::vector<HermitianOp> gram_schmidt_hs(const std::vector<HermitianOp>& ops,
                                         double tol = kDefaultTol);

/// Generalized Gell-Mann generators of SU(d) in a fixed deterministic order:
/// symmetric pairs for ascending (j,k), then antisymmetric pairs, then
/// diagonal generators; all normalized to Tr(G^2) = 2.
GeneratorBasis gell_mann_basis(int d);

/// Extends an orthonormalized traceless set {L_m} to a full generator basis;
/// returns only the new elements {l_n}, n = 1..(d^2-1-t), each Hermitian,
/// traceless, Tr(l_m l_n) = 2 delta_mn and Tr(L_m l_n) = 0.
std::vector<HermitianOp> complete_to_generator_basis(const std::vector<HermitianOp>& partial,
                                                     int d, double tol = kDefaultTol);

}  // namespace locc
