#include "locc/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace locc {

namespace {

double off_diag_norm(const CMatrix& a) {
  double s = 0.0;
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

}  // namespace

EigenDecomposition eig_hermitian(const CMatrix& input) {
  const int d = input.dim();
  if (d <= 0) throw input_error("eig_hermitian: empty matrix");
  if (!input.finite()) throw input_error("eig_hermitian: non-finite entries");

  CMatrix a = input;
  CMatrix v = CMatrix::identity(d);
  const double scale = std::max(1.0, a.hs_norm());
  const double stop = 1e-13 * scale;

  for (int sweep = 0; sweep < 100 && off_diag_norm(a) > stop; ++sweep) {
    for (int p = 0; p < d; ++p)
      for (int q = p + 1; q < d; ++q) {
        const cx apq = a(p, q);
        const double m = std::abs(apq);
        if (m <= stop / (static_cast<double>(d) * d)) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double phi = std::arg(apq);
        // Rotation angle from m*cos(2t) + ((aqq-app)/2)*sin(2t) = 0.
        const double tau = (app - aqq) / (2.0 * m);
        const double sign = (tau >= 0.0) ? 1.0 : -1.0;
        const double t = sign / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cx eip = std::polar(1.0, phi);
        const cx spq = s * eip;             // J[p][q] = -s e^{i phi}
        const cx sqp = s * std::conj(eip);  // J[q][p] =  s e^{-i phi}

        // A <- J^dagger A J, rows p,q then columns p,q.
        for (int k = 0; k < d; ++k) {
          const cx apk = a(p, k);
          const cx aqk = a(q, k);
          a(p, k) = c * apk + std::conj(sqp) * aqk;
          a(q, k) = -std::conj(spq) * apk + c * aqk;
        }
        for (int k = 0; k < d; ++k) {
          const cx akp = a(k, p);
          const cx akq = a(k, q);
          a(k, p) = c * akp + sqp * akq;
          a(k, q) = -spq * akp + c * akq;
          const cx vkp = v(k, p);
          const cx vkq = v(k, q);
          v(k, p) = c * vkp + sqp * vkq;
          v(k, q) = -spq * vkp + c * vkq;
        }
        a(p, q) = cx(0.0, 0.0);
        a(q, p) = cx(0.0, 0.0);
        a(p, p) = cx(a(p, p).real(), 0.0);
        a(q, q) = cx(a(q, q).real(), 0.0);
      }
  }
  if (off_diag_norm(a) > 1e-10 * scale)
    throw std::runtime_error("eig_hermitian: Jacobi iteration did not converge");

  EigenDecomposition out;
  out.values.resize(d);
  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });
  out.vectors = CMatrix(d);
  for (int c = 0; c < d; ++c) {
    out.values[c] = a(order[c], order[c]).real();
    for (int r = 0; r < d; ++r) out.vectors(r, c) = v(r, order[c]);
  }
  return out;
}

double min_eigenvalue(const HermitianOp& h) {
  return eig_hermitian(h.matrix()).values.front();
}

CMatrix sqrt_psd(const HermitianOp& h, double psd_tol) {
  const EigenDecomposition e = eig_hermitian(h.matrix());
  const int d = h.dim();
  double top = 0.0;
  for (double lam : e.values) top = std::max(top, std::abs(lam));
  const double scale = std::max(1.0, top);
  if (e.values.front() < -psd_tol * scale)
    throw input_error("sqrt_psd: matrix is not positive semidefinite");
  CMatrix out(d);
  for (int k = 0; k < d; ++k) {
    const double root = std::sqrt(std::max(e.values[k], 0.0));
    if (root == 0.0) continue;
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c)
        out(r, c) += root * e.vectors(r, k) * std::conj(e.vectors(c, k));
  }
  return out;
}

}  // namespace locc
