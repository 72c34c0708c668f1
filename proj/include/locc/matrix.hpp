#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "locc/common.hpp"

namespace locc {

using cx = std::complex<double>;

/// Dense square complex matrix, row-major storage.
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(int dim);
  CMatrix(int dim, std::vector<cx> entries);

  static CMatrix identity(int dim);
  /// |u><v| for two vectors of equal length.
  static CMatrix outer(const std::vector<cx>& u, const std::vector<cx>& v);

  int dim() const { return dim_; }
  cx& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * dim_ + c]; }
  const cx& operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * dim_ + c];
  }
  const std::vector<cx>& data() const { return data_; }

  CMatrix adjoint() const;
  cx trace() const;
  double max_abs() const;
  double hs_norm() const;  // Frobenius norm
  bool finite() const;

  CMatrix& operator+=(const CMatrix& o);
  CMatrix& operator-=(const CMatrix& o);
  CMatrix& operator*=(cx s);
  friend CMatrix operator+(CMatrix a, const CMatrix& b) {
    a += b;
    return a;
  }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) {
    a -= b;
    return a;
  }
  friend CMatrix operator*(cx s, CMatrix a) {
    a *= s;
    return a;
  }
  CMatrix operator*(const CMatrix& o) const;
  std::vector<cx> apply(const std::vector<cx>& v) const;

 private:
  int dim_ = 0;
  std::vector<cx> data_;
};

double max_abs_diff(const CMatrix& a, const CMatrix& b);

/// <a|b>, conjugate-linear in the first argument.
cx vec_inner(const std::vector<cx>& a, const std::vector<cx>& b);
double vec_norm(const std::vector<cx>& v);

}  // namespace locc
