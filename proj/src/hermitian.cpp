#include "locc/hermitian.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace locc {

namespace {

// Tr(A B) for raw matrices, real part only (exact for Hermitian inputs).
double raw_hs_inner(const CMatrix& a, const CMatrix& b) {
  const int d = a.dim();
  double acc = 0.0;
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) acc += (a(j, k) * b(k, j)).real();
  return acc;
}

}  // namespace

HermitianOp HermitianOp::from(const CMatrix& m, double tol) {
  if (m.dim() <= 0) throw input_error("HermitianOp: empty matrix");
  if (!m.finite()) throw input_error("HermitianOp: non-finite entries");
  const double scale = std::max(1.0, m.max_abs());
  for (int r = 0; r < m.dim(); ++r)
    for (int c = r; c < m.dim(); ++c)
      if (std::abs(m(r, c) - std::conj(m(c, r))) > tol * scale)
        throw input_error("HermitianOp: matrix is not Hermitian within tolerance");
  CMatrix h = m;
  for (int r = 0; r < m.dim(); ++r) {
    h(r, r) = cx(m(r, r).real(), 0.0);
    for (int c = r + 1; c < m.dim(); ++c) {
      const cx avg = 0.5 * (m(r, c) + std::conj(m(c, r)));
      h(r, c) = avg;
      h(c, r) = std::conj(avg);
    }
  }
  return HermitianOp(std::move(h));
}

bool HermitianOp::traceless(double tol) const { return std::abs(trace()) <= tol; }

double hs_inner(const HermitianOp& a, const HermitianOp& b) {
  if (a.dim() != b.dim()) throw input_error("hs_inner: dimension mismatch");
  return raw_hs_inner(a.matrix(), b.matrix());
}

GeneratorBasis GeneratorBasis::make(int dim, std::vector<HermitianOp> ops, double tol) {
  if (dim < 2) throw input_error("GeneratorBasis: dim must be >= 2");
  if (ops.size() != static_cast<std::size_t>(dim) * dim - 1)
    throw input_error("GeneratorBasis: expected d^2-1 operators");
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (ops[i].dim() != dim) throw input_error("GeneratorBasis: dimension mismatch");
    if (!ops[i].traceless(10 * tol)) throw input_error("GeneratorBasis: operator is not traceless");
    for (std::size_t j = i; j < ops.size(); ++j) {
      const double target = (i == j) ? 2.0 : 0.0;
      if (std::abs(hs_inner(ops[i], ops[j]) - target) > 10 * tol)
        throw input_error("GeneratorBasis: Tr(G_m G_n) = 2 delta_mn violated");
    }
  }
  GeneratorBasis g;
  g.dim = dim;
  g.ops = std::move(ops);
  return g;
}

std::vector<HermitianOp> gram_schmidt_hs(const std::vector<HermitianOp>& ops, double tol) {
  if (tol <= 0.0) throw input_error("gram_schmidt_hs: tolerance must be positive");
  int d = -1;
  for (const auto& op : ops) {
    if (d < 0) d = op.dim();
    if (op.dim() != d) throw input_error("gram_schmidt_hs: mixed dimensions");
  }
  std::vector<CMatrix> basis;
  std::vector<HermitianOp> out;
  for (const auto& op : ops) {
    CMatrix v = op.matrix();
    const double input_norm = v.hs_norm();
    // Modified Gram-Schmidt with one re-orthogonalization pass; classical GS
    // loses orthogonality near rank boundaries.
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) {
        const double coeff = raw_hs_inner(v, b) / 2.0;
        v -= cx(coeff, 0.0) * b;
      }
    const double res = v.hs_norm();
    if (res <= tol * std::max(1.0, input_norm)) continue;
    v *= cx(std::sqrt(2.0) / res, 0.0);
    basis.push_back(v);
    out.push_back(HermitianOp::from(v));
  }
  return out;
}

GeneratorBasis gell_mann_basis(int d) {
  if (d < 2) throw input_error("gell_mann_basis: d must be >= 2");
  std::vector<HermitianOp> ops;
  ops.reserve(static_cast<std::size_t>(d) * d - 1);
  // Symmetric: E_jk + E_kj.
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      CMatrix m(d);
      m(j, k) = cx(1.0, 0.0);
      m(k, j) = cx(1.0, 0.0);
      ops.push_back(HermitianOp::from(m));
    }
  // Antisymmetric: -i(E_jk - E_kj).
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      CMatrix m(d);
      m(j, k) = cx(0.0, -1.0);
      m(k, j) = cx(0.0, 1.0);
      ops.push_back(HermitianOp::from(m));
    }
  // Diagonal: sqrt(2/(l(l+1))) diag(1,...,1,-l,0,...,0), Tr(G^2) = 2.
  for (int l = 1; l < d; ++l) {
    CMatrix m(d);
    const double f = std::sqrt(2.0 / (static_cast<double>(l) * (l + 1)));
    for (int j = 0; j < l; ++j) m(j, j) = cx(f, 0.0);
    m(l, l) = cx(-f * l, 0.0);
    ops.push_back(HermitianOp::from(m));
  }
  GeneratorBasis g;
  g.dim = d;
  g.ops = std::move(ops);
  return g;
}

std::vector<HermitianOp> complete_to_generator_basis(const std::vector<HermitianOp>& partial,
                                                     int d, double tol) {
  if (d < 2) throw input_error("complete_to_generator_basis: d must be >= 2");
  const std::size_t target = static_cast<std::size_t>(d) * d - 1;
  if (partial.size() > target)
    throw input_error("complete_to_generator_basis: too many operators for SU(d)");
  for (std::size_t i = 0; i < partial.size(); ++i) {
    if (partial[i].dim() != d)
      throw input_error("complete_to_generator_basis: dimension mismatch");
    if (!partial[i].traceless(10 * tol))
      throw input_error("complete_to_generator_basis: partial set is not traceless");
    for (std::size_t j = i; j < partial.size(); ++j) {
      const double t = (i == j) ? 2.0 : 0.0;
      if (std::abs(hs_inner(partial[i], partial[j]) - t) > 10 * tol)
        throw input_error("complete_to_generator_basis: partial set is not orthonormalized");
    }
  }
  std::vector<CMatrix> basis;
  basis.reserve(target);
  for (const auto& p : partial) basis.push_back(p.matrix());
  std::vector<HermitianOp> out;
  for (const auto& g : gell_mann_basis(d).ops) {
    CMatrix v = g.matrix();
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) {
        const double coeff = raw_hs_inner(v, b) / 2.0;
        v -= cx(coeff, 0.0) * b;
      }
    const double res = v.hs_norm();
    if (res <= tol * std::max(1.0, g.hs_norm())) continue;
    v *= cx(std::sqrt(2.0) / res, 0.0);
    basis.push_back(v);
    out.push_back(HermitianOp::from(v));
  }
  if (out.size() != target - partial.size())
    throw std::logic_error("complete_to_generator_basis: completion count mismatch");
  return out;
}

}  // namespace locc
