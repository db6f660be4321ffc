#include "schatten/tuple.hpp"

#include <algorithm>
#include <cmath>

#include "schatten/eig.hpp"

namespace schatten {

const char* to_string(Constraint c) {
  switch (c) {
    case Constraint::Free: return "Free";
    case Constraint::SumZero: return "SumZero";
    case Constraint::OrthogonalRanges: return "OrthogonalRanges";
    case Constraint::PositiveEach: return "PositiveEach";
  }
  return "?";
}

ComplexMatrix OperatorTuple::sum() const {
  if (matrices.empty()) throw std::invalid_argument("empty tuple");
  ComplexMatrix s = matrices[0];
  for (std::size_t i = 1; i < matrices.size(); ++i) s = s + matrices[i];
  return s;
}

void OperatorTuple::validate(double tol) const {
  if (matrices.empty()) throw std::invalid_argument("tuple must have n >= 1");
  for (const auto& m : matrices)
    if (!m.same_shape(matrices[0]))
      throw std::invalid_argument("tuple shapes are not uniform");

  switch (constraint) {
    case Constraint::Free:
      return;
    case Constraint::SumZero: {
      double scale = 0.0;
      for (const auto& m : matrices) scale += frobenius_norm(m);
      if (frobenius_norm(sum()) > tol * std::max(scale, 1e-300))
        throw std::invalid_argument("SumZero constraint violated");
      return;
    }
    case Constraint::OrthogonalRanges: {
      for (std::size_t i = 0; i < matrices.size(); ++i)
        for (std::size_t j = 0; j < matrices.size(); ++j) {
          if (i == j) continue;
          double scale =
              frobenius_norm(matrices[i]) * frobenius_norm(matrices[j]);
          double cross = frobenius_norm(matmul(adjoint(matrices[i]), matrices[j]));
          if (cross > tol * std::max(scale, 1e-300))
            throw std::invalid_argument("OrthogonalRanges constraint violated");
        }
      return;
    }
    case Constraint::PositiveEach: {
      for (const auto& m : matrices) {
        std::vector<double> ev;
        try {
          ev = hermitian_eigenvalues(m);
        } catch (const std::exception&) {
          throw std::invalid_argument("PositiveEach constraint violated: not Hermitian");
        }
        double lmax = 0.0;
        for (double l : ev) lmax = std::max(lmax, l);
        for (double l : ev)
          if (l < -kClampRel * std::max(lmax, 1e-300))
            throw std::invalid_argument("PositiveEach constraint violated: negative eigenvalue");
      }
      return;
    }
  }
}

void validate_cross_orthogonal(const OperatorTuple& a, const OperatorTuple& b,
                               double tol) {
  if (a.size() != b.size())
    throw std::invalid_argument("tuples must have equal n");
  ComplexMatrix sa = a.sum(), sb = b.sum();
  // natural scale: sums of Frobenius norms, not the (possibly tiny) sums
  double na = 0.0, nb = 0.0;
  for (const auto& m : a.matrices) na += frobenius_norm(m);
  for (const auto& m : b.matrices) nb += frobenius_norm(m);
  double scale = na * nb;
  double cross = frobenius_norm(matmul(adjoint(sa), sb));
  if (cross > tol * std::max(scale, 1e-300))
    throw std::invalid_argument("cross-orthogonality constraint violated");
}

}  // namespace schatten
