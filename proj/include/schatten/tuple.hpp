#pragma once

#include <vector>

#include "schatten/matrix.hpp"

namespace schatten {

inline constexpr double kConstraintTol = 1e-10;

enum class Constraint { Free, SumZero, OrthogonalRanges, PositiveEach };

const char* to_string(Constraint c);

/// Ordered list of same-shape matrices A_1..A_n with a declared
/// hypothesis tag. validate() checks the tag against the data.
struct OperatorTuple {
  std::vector<ComplexMatrix> matrices;
  Constraint constraint = Constraint::Free;

  std::size_t size() const { return matrices.size(); }
  std::size_t dim() const { return matrices.empty() ? 0 : matrices[0].rows(); }

  ComplexMatrix sum() const;

  /// Throws std::invalid_argument naming the violated constraint.
  void validate(double tol = kConstraintTol) const;
};

/// sum_{i,j} A_i* B_j = 0, checked as ||(sum A)* (sum B)||_F against the
/// natural scale (sum_i ||A_i||_F)(sum_j ||B_j||_F).
void validate_cross_orthogonal(const OperatorTuple& a, const OperatorTuple& b,
                               double tol = kConstraintTol);

}  // namespace schatten
