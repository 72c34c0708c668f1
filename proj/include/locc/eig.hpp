#pragma once

#include <vector>

#include "locc/hermitian.hpp"
#include "locc/matrix.hpp"

namespace locc {

/// A = V diag(values) V^dagger with eigenvalues ascending and V unitary.
struct EigenDecomposition {
  std::vector<double> values;
  CMatrix vectors;  // columns are eigenvectors
};

/// Cyclic Jacobi diagonalization for Hermitian matrices. Small dense inputs
/// only; convergence failure raises std::runtime_error.
EigenDecomposition eig_hermitian(const CMatrix& a);

double min_eigenvalue(const HermitianOp& h);

/// Principal (Hermitian positive) square root. Eigenvalues below
/// -psd_tol * max(1, spectral scale) are rejected; small negatives clamp to 0.
CMatrix sqrt_psd(const HermitianOp& h, double psd_tol = kPsdTol);

}  // namespace locc
