#pragma once

#include <vector>

#include "schatten/matrix.hpp"

namespace schatten {

// Inputs with ||H - H*||_F <= kSymmetrizeTol * ||H||_F are symmetrized,
// anything worse is rejected.
inline constexpr double kSymmetrizeTol = 1e-10;
// Eigenvalues in [-kClampRel * lambda_max, 0) are treated as exact zeros.
inline constexpr double kClampRel = 1e-12;

struct HermitianEigen {
  std::vector<double> values;  // nonincreasing
  ComplexMatrix vectors;       // columns, same order as values
};

/// Cyclic Jacobi for complex Hermitian matrices. Converges when the
/// off-diagonal Frobenius mass drops below 1e-14 of the diagonal mass.
HermitianEigen hermitian_eig(const ComplexMatrix& h);

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

/// Nonincreasing, nonnegative; length min(rows, cols). Computed from the
/// eigenvalues of gram(a) with small negatives clamped to zero.
std::vector<double> singular_values(const ComplexMatrix& a);

/// Spectral square root of a Hermitian PSD matrix. Eigenvalues below
/// -kClampRel * lambda_max are a domain error; small negatives clamp to 0.
ComplexMatrix psd_sqrt(const ComplexMatrix& h);

/// Orthonormal basis of the column span, via modified Gram-Schmidt.
/// Columns with residual norm <= drop_tol are dropped; rank may be 0,
/// in which case q is not meaningful.
struct ColumnBasis {
  ComplexMatrix q;  // rows x rank
  std::size_t rank = 0;
};
ColumnBasis orthonormal_columns(const ComplexMatrix& m, double drop_tol);

}  // namespace schatten
