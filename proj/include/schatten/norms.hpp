#pragma once

#include <vector>

#include "schatten/matrix.hpp"

namespace schatten {

/// Validated exponent p in (0, inf) with its regime. For 0 < p < 1 the
/// functional is only a quasi-norm: the triangle inequality fails there
/// and nothing in this library assumes it.
class PExponent {
public:
  explicit PExponent(double p);

  double value() const { return p_; }
  bool quasi_norm() const { return p_ < 1.0; }   // 0 < p < 1
  bool is_two() const { return p_ == 2.0; }
  bool le_two() const { return p_ <= 2.0; }
  bool ge_two() const { return p_ >= 2.0; }
  bool le_one() const { return p_ <= 1.0; }
  bool ge_one() const { return p_ >= 1.0; }

private:
  double p_;
};

/// (sum_k s_k^p)^(1/p) of a nonnegative sequence, scaled by the maximum
/// so extreme p cannot overflow or underflow.
double lp_norm(const std::vector<double>& s, double p);

/// Schatten p-norm (tr |A|^p)^(1/p) over singular values.
double schatten_norm(const ComplexMatrix& a, const PExponent& p);

/// PSD fast path: p-th power sum of the eigenvalues directly. Equals
/// schatten_norm for Hermitian PSD input; rejects non-PSD input.
double schatten_norm_psd(const ComplexMatrix& h, const PExponent& p);

/// p = 2 by the direct entrywise sum (Frobenius).
double hilbert_schmidt_norm(const ComplexMatrix& a);

}  // namespace schatten
