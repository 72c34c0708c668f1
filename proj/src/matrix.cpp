#include "locc/matrix.hpp"

#include <cmath>
#include <string>

namespace locc {

CMatrix::CMatrix(int dim) : dim_(dim) {
  if (dim < 0) throw input_error("CMatrix: negative dimension");
  data_.assign(static_cast<std::size_t>(dim) * dim, cx(0.0, 0.0));
}

CMatrix::CMatrix(int dim, std::vector<cx> entries) : dim_(dim), data_(std::move(entries)) {
  if (dim <= 0) throw input_error("CMatrix: dimension must be positive");
  if (data_.size() != static_cast<std::size_t>(dim) * dim)
    throw input_error("CMatrix: entry count does not match dim*dim");
}

CMatrix CMatrix::identity(int dim) {
  CMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = cx(1.0, 0.0);
  return m;
}

CMatrix CMatrix::outer(const std::vector<cx>& u, const std::vector<cx>& v) {
  if (u.size() != v.size() || u.empty()) throw input_error("outer: incompatible vector lengths");
  const int d = static_cast<int>(u.size());
  CMatrix m(d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) m(r, c) = u[r] * std::conj(v[c]);
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix m(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) m(c, r) = std::conj((*this)(r, c));
  return m;
}

cx CMatrix::trace() const {
  cx t(0.0, 0.0);
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const cx& z : data_) m = std::max(m, std::abs(z));
  return m;
}

double CMatrix::hs_norm() const {
  double s = 0.0;
  for (const cx& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

bool CMatrix::finite() const {
  for (const cx& z : data_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
  if (o.dim_ != dim_) throw input_error("matrix addition: dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
  if (o.dim_ != dim_) throw input_error("matrix subtraction: dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(cx s) {
  for (cx& z : data_) z *= s;
  return *this;
}

CMatrix CMatrix::operator*(const CMatrix& o) const {
  if (o.dim_ != dim_) throw input_error("matrix product: dimension mismatch");
  CMatrix out(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int k = 0; k < dim_; ++k) {
      const cx a = (*this)(r, k);
      if (a == cx(0.0, 0.0)) continue;
      for (int c = 0; c < dim_; ++c) out(r, c) += a * o(k, c);
    }
  return out;
}

std::vector<cx> CMatrix::apply(const std::vector<cx>& v) const {
  if (v.size() != static_cast<std::size_t>(dim_)) throw input_error("apply: vector length mismatch");
  std::vector<cx> out(dim_, cx(0.0, 0.0));
  for (int r = 0; r < dim_; ++r) {
    cx acc(0.0, 0.0);
    for (int c = 0; c < dim_; ++c) acc += (*this)(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.dim() != b.dim()) throw input_error("max_abs_diff: dimension mismatch");
  double m = 0.0;
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) m = std::max(m, std::abs(a(r, c) - b(r, c)));
  return m;
}

cx vec_inner(const std::vector<cx>& a, const std::vector<cx>& b) {
  if (a.size() != b.size()) throw input_error("vec_inner: length mismatch");
  cx acc(0.0, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double vec_norm(const std::vector<cx>& v) {
  double s = 0.0;
  for (const cx& z : v) s += std::norm(z);
  return std::sqrt(s);
}

}  // namespace locc
