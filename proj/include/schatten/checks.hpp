#pragma once

#include <utility>
#include <vector>

#include "schatten/norms.hpp"
#include "schatten/report.hpp"
#include "schatten/tuple.hpp"

namespace schatten {

/// Triangle inequality ||sum A_i||_p <= sum ||A_i||_p. Inapplicable for
/// p < 1 (quasi-norm regime).
CheckReport check_triangle(const OperatorTuple& t, const PExponent& p,
                           double tol = kVerdictRelTol);

/// Reverse triangle for positive operators, 0 < p <= 1:
/// sum ||A_i||_p <= ||sum A_i||_p. Inapplicable for p > 1.
CheckReport check_reverse_triangle_positive(const OperatorTuple& t,
                                            const PExponent& p,
                                            double tol = kVerdictRelTol);

/// The two chained power-sum bounds for positive tuples:
///   first:  n^(p-1) sum ||A_i||_p^p  vs  ||sum A_i||_p^p
///   second: ||sum A_i||_p^p          vs  sum ||A_i||_p^p
/// oriented left-to-right for p <= 1 and flipped for p >= 1; both collapse
/// to equalities at p = 1.
std::pair<CheckReport, CheckReport> check_lemma(const OperatorTuple& t,
                                                const PExponent& p,
                                                double tol = kVerdictRelTol);

/// Scalar version of the chained bounds for nonnegative reals.
std::pair<CheckReport, CheckReport> check_scalar_power(
    const std::vector<double>& a, const PExponent& p,
    double tol = kVerdictRelTol);

/// ||A+B||_2^2 + ||A-B||_2^2 = 2(||A||_2^2 + ||B||_2^2).
CheckReport check_parallelogram(const ComplexMatrix& a, const ComplexMatrix& b,
                                double tol = kVerdictRelTol);

/// sum_{i,j} ||A_i - A_j||_2^2 = 2n sum_i ||A_i||_2^2 for sum-zero tuples,
/// n >= 3.
CheckReport check_lorch_identity(const OperatorTuple& t,
                                 double tol = kVerdictRelTol);

/// 2^(p/2-1) n^(p-1) (sum ||A_i||_p^p + sum ||B_i||_p^p)  vs
/// sum_{i,j} ||A_i +- B_j||_p^p, under sum_{i,j} A_i* B_j = 0.
/// Bound <= sum for p <= 2, flipped for p >= 2, equality at p = 2.
CheckReport check_th1(const OperatorTuple& a, const OperatorTuple& b,
                      const PExponent& p, Sign s, double tol = kVerdictRelTol);

/// Th1 with B_j = A_j for a sum-zero tuple; bound 2^(p/2) n^(p-1) sum ||A_i||_p^p.
CheckReport check_cor1(const OperatorTuple& t, const PExponent& p, Sign s,
                       double tol = kVerdictRelTol);

/// Orthogonal-ranges variant: bound (2n +- 2)^(p/2) n^(p/2-1) sum ||A_i||_p^p.
CheckReport check_orth_th1(const OperatorTuple& t, const PExponent& p, Sign s,
                           double tol = kVerdictRelTol);

/// sum_{i,j} ||A_i +- B_j||_p^2  vs
/// n^(2/p) sum_i ||(|A_i|^2 + |B_i|^2)^(1/2)||_p^2.
CheckReport check_th2(const OperatorTuple& a, const OperatorTuple& b,
                      const PExponent& p, Sign s, double tol = kVerdictRelTol);

/// Th2 with B_j = A_j: rhs 2 n^(2/p) sum ||A_i||_p^2.
CheckReport check_cor2(const OperatorTuple& t, const PExponent& p, Sign s,
                       double tol = kVerdictRelTol);

/// Orthogonal-ranges variant: 2 n^(2/p-1) (n +- 1) sum ||A_i||_p^2.
CheckReport check_orth_th2(const OperatorTuple& t, const PExponent& p, Sign s,
                           double tol = kVerdictRelTol);

/// One admissible problem instance: a tuple (plus a second tuple for the
/// two-family theorems) or a scalar list for ScalarPower.
struct CheckInstance {
  OperatorTuple a;
  std::optional<OperatorTuple> b;  // Th1/Th2 only
  std::vector<double> scalars;     // ScalarPower only
};

/// Dispatch. Validates the instance against the case hypothesis first.
/// ScalarPower and the lemma cases still produce exactly one report each;
/// LemmaA is the n^(p-1) bound, LemmaB the plain power-sum bound, and
/// ScalarPower reports both scalar bounds as two rows.
std::vector<CheckReport> run_case(InequalityCase c, const CheckInstance& inst,
                                  const PExponent& p, std::optional<Sign> sign,
                                  double tol = kVerdictRelTol);

}  // namespace schatten
