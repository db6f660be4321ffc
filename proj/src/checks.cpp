#include "schatten/checks.hpp"

#include <cmath>

#include "schatten/eig.hpp"

namespace schatten {

namespace {

int tuple_n(const OperatorTuple& t) { return static_cast<int>(t.size()); }
int tuple_d(const OperatorTuple& t) { return static_cast<int>(t.dim()); }

void require_constraint(const OperatorTuple& t, Constraint c) {
  if (t.constraint != c)
    throw std::invalid_argument(std::string("tuple constraint must be ") +
                                to_string(c));
  t.validate();
}

double sum_norm_pows(const OperatorTuple& t, const PExponent& p, double power) {
  double s = 0.0;
  for (const auto& m : t.matrices) s += std::pow(schatten_norm(m, p), power);
  return s;
}

ComplexMatrix signed_combine(const ComplexMatrix& a, const ComplexMatrix& b,
                             Sign s) {
  return s == Sign::Plus ? a + b : a - b;
}

// sum over all n^2 ordered pairs of ||A_i +- B_j||_p^power
double pair_sum(const OperatorTuple& a, const OperatorTuple& b,
                const PExponent& p, Sign s, double power) {
  double acc = 0.0;
  for (const auto& ai : a.matrices)
    for (const auto& bj : b.matrices)
      acc += std::pow(schatten_norm(signed_combine(ai, bj, s), p), power);
  return acc;
}

// Two-regime statements: bound vs sum with the regime deciding the side,
// equality exactly at p = 2.
CheckReport regime_report(InequalityCase c, const PExponent& p, int n, int d,
                          Sign s, double bound, double pairsum, double tol) {
  if (p.is_two())
    return make_report(c, p.value(), n, d, s, bound, pairsum,
                       Orientation::Equality, tol);
  if (p.le_two())
    return make_report(c, p.value(), n, d, s, bound, pairsum,
                       Orientation::LhsLeqRhs, tol);
  return make_report(c, p.value(), n, d, s, pairsum, bound,
                     Orientation::LhsLeqRhs, tol);
}

}  // namespace

CheckReport check_triangle(const OperatorTuple& t, const PExponent& p,
                           double tol) {
  t.validate();
  if (p.quasi_norm())
    return make_inapplicable(InequalityCase::Triangle, p.value(), tuple_n(t),
                             tuple_d(t), std::nullopt, tol);
  double lhs = schatten_norm(t.sum(), p);
  double rhs = 0.0;
  for (const auto& m : t.matrices) rhs += schatten_norm(m, p);
  return make_report(InequalityCase::Triangle, p.value(), tuple_n(t),
                     tuple_d(t), std::nullopt, lhs, rhs,
                     Orientation::LhsLeqRhs, tol);
}

CheckReport check_reverse_triangle_positive(const OperatorTuple& t,
                                            const PExponent& p, double tol) {
  require_constraint(t, Constraint::PositiveEach);
  if (!p.le_one())
    return make_inapplicable(InequalityCase::ReverseTrianglePositive,
                             p.value(), tuple_n(t), tuple_d(t), std::nullopt,
                             tol);
  double lhs = 0.0;
  for (const auto& m : t.matrices) lhs += schatten_norm(m, p);
  double rhs = schatten_norm(t.sum(), p);
  return make_report(InequalityCase::ReverseTrianglePositive, p.value(),
                     tuple_n(t), tuple_d(t), std::nullopt, lhs, rhs,
                     Orientation::LhsLeqRhs, tol);
}

std::pair<CheckReport, CheckReport> check_lemma(const OperatorTuple& t,
                                                const PExponent& p,
                                                double tol) {
  require_constraint(t, Constraint::PositiveEach);
  const double pv = p.value();
  const int n = tuple_n(t), d = tuple_d(t);
  double powsum = sum_norm_pows(t, p, pv);
  double scaled = std::pow(static_cast<double>(n), pv - 1.0) * powsum;
  double total = std::pow(schatten_norm(t.sum(), p), pv);
  CheckReport first, second;
  if (p.le_one()) {
    first = make_report(InequalityCase::LemmaA, pv, n, d, std::nullopt, scaled,
                        total, Orientation::LhsLeqRhs, tol);
    second = make_report(InequalityCase::LemmaB, pv, n, d, std::nullopt, total,
                         powsum, Orientation::LhsLeqRhs, tol);
  } else {
    first = make_report(InequalityCase::LemmaA, pv, n, d, std::nullopt, total,
                        scaled, Orientation::LhsLeqRhs, tol);
    second = make_report(InequalityCase::LemmaB, pv, n, d, std::nullopt,
                         powsum, total, Orientation::LhsLeqRhs, tol);
  }
  return {first, second};
}

std::pair<CheckReport, CheckReport> check_scalar_power(
    const std::vector<double>& a, const PExponent& p, double tol) {
  if (a.empty()) throw std::invalid_argument("scalar list must be nonempty");
  for (double v : a)
    if (!(v >= 0.0)) throw std::invalid_argument("scalars must be nonnegative");
  const double pv = p.value();
  const int n = static_cast<int>(a.size());
  double powsum = 0.0, total = 0.0;
  for (double v : a) {
    powsum += std::pow(v, pv);
    total += v;
  }
  double scaled = std::pow(static_cast<double>(n), pv - 1.0) * powsum;
  double mid = std::pow(total, pv);
  CheckReport first, second;
  if (p.le_one()) {
    first = make_report(InequalityCase::ScalarPower, pv, n, 0, std::nullopt,
                        scaled, mid, Orientation::LhsLeqRhs, tol);
    second = make_report(InequalityCase::ScalarPower, pv, n, 0, std::nullopt,
                         mid, powsum, Orientation::LhsLeqRhs, tol);
  } else {
    first = make_report(InequalityCase::ScalarPower, pv, n, 0, std::nullopt,
                        powsum, mid, Orientation::LhsLeqRhs, tol);
    second = make_report(InequalityCase::ScalarPower, pv, n, 0, std::nullopt,
                         mid, scaled, Orientation::LhsLeqRhs, tol);
  }
  return {first, second};
}

CheckReport check_parallelogram(const ComplexMatrix& a, const ComplexMatrix& b,
                                double tol) {
  if (!a.same_shape(b))
    throw std::invalid_argument("parallelogram: shape mismatch");
  double sum2 = hilbert_schmidt_norm(a + b);
  double diff2 = hilbert_schmidt_norm(a - b);
  double na = hilbert_schmidt_norm(a), nb = hilbert_schmidt_norm(b);
  double lhs = sum2 * sum2 + diff2 * diff2;
  double rhs = 2.0 * (na * na + nb * nb);
  return make_report(InequalityCase::Parallelogram, 2.0, 2,
                     static_cast<int>(a.rows()), std::nullopt, lhs, rhs,
                     Orientation::Equality, tol);
}

CheckReport check_lorch_identity(const OperatorTuple& t, double tol) {
  require_constraint(t, Constraint::SumZero);
  if (t.size() < 3)
    throw std::invalid_argument("Lorch identity requires n >= 3");
  double lhs = 0.0;
  for (const auto& ai : t.matrices)
    for (const auto& aj : t.matrices) {
      double nrm = hilbert_schmidt_norm(ai - aj);
      lhs += nrm * nrm;
    }
  double rhs = 0.0;
  for (const auto& ai : t.matrices) {
    double nrm = hilbert_schmidt_norm(ai);
    rhs += nrm * nrm;
  }
  rhs *= 2.0 * static_cast<double>(t.size());
  return make_report(InequalityCase::LorchIdentity, 2.0, tuple_n(t),
                     tuple_d(t), std::nullopt, lhs, rhs, Orientation::Equality,
                     tol);
}

CheckReport check_th1(const OperatorTuple& a, const OperatorTuple& b,
                      const PExponent& p, Sign s, double tol) {
  a.validate();
  b.validate();
  validate_cross_orthogonal(a, b);
  const double pv = p.value();
  const int n = tuple_n(a), d = tuple_d(a);
  double bound = std::pow(2.0, pv / 2.0 - 1.0) *
                 std::pow(static_cast<double>(n), pv - 1.0) *
                 (sum_norm_pows(a, p, pv) + sum_norm_pows(b, p, pv));
  double pairsum = pair_sum(a, b, p, s, pv);
  return regime_report(InequalityCase::Th1, p, n, d, s, bound, pairsum, tol);
}

CheckReport check_cor1(const OperatorTuple& t, const PExponent& p, Sign s,
                       double tol) {
  require_constraint(t, Constraint::SumZero);
  const double pv = p.value();
  const int n = tuple_n(t), d = tuple_d(t);
  double bound = std::pow(2.0, pv / 2.0) *
                 std::pow(static_cast<double>(n), pv - 1.0) *
                 sum_norm_pows(t, p, pv);
  double pairsum = pair_sum(t, t, p, s, pv);
  return regime_report(InequalityCase::Cor1, p, n, d, s, bound, pairsum, tol);
}

CheckReport check_orth_th1(const OperatorTuple& t, const PExponent& p, Sign s,
                           double tol) {
  require_constraint(t, Constraint::OrthogonalRanges);
  const double pv = p.value();
  const int n = tuple_n(t), d = tuple_d(t);
  double base = s == Sign::Plus ? 2.0 * n + 2.0 : 2.0 * n - 2.0;
  double bound = std::pow(base, pv / 2.0) *
                 std::pow(static_cast<double>(n), pv / 2.0 - 1.0) *
                 sum_norm_pows(t, p, pv);
  double pairsum = pair_sum(t, t, p, s, pv);
  return regime_report(InequalityCase::OrthTh1, p, n, d, s, bound, pairsum,
                       tol);
}

namespace {

// Two-regime statements whose weak side is the pair sum: pairsum <= bound
// for p <= 2, flipped for p >= 2, equality at p = 2.
CheckReport regime_report_sum_first(InequalityCase c, const PExponent& p,
                                    int n, int d, Sign s, double pairsum,
                                    double bound, double tol) {
  if (p.is_two())
    return make_report(c, p.value(), n, d, s, pairsum, bound,
                       Orientation::Equality, tol);
  if (p.le_two())
    return make_report(c, p.value(), n, d, s, pairsum, bound,
                       Orientation::LhsLeqRhs, tol);
  return make_report(c, p.value(), n, d, s, bound, pairsum,
                     Orientation::LhsLeqRhs, tol);
}

}  // namespace

CheckReport check_th2(const OperatorTuple& a, const OperatorTuple& b,
                      const PExponent& p, Sign s, double tol) {
  a.validate();
  b.validate();
  validate_cross_orthogonal(a, b);
  const double pv = p.value();
  const int n = tuple_n(a), d = tuple_d(a);
  double pairsum = pair_sum(a, b, p, s, 2.0);
  double rhs = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ComplexMatrix root =
        psd_sqrt(gram(a.matrices[i]) + gram(b.matrices[i]));
    double nrm = schatten_norm(root, p);
    rhs += nrm * nrm;
  }
  rhs *= std::pow(static_cast<double>(n), 2.0 / pv);
  return regime_report_sum_first(InequalityCase::Th2, p, n, d, s, pairsum, rhs,
                                 tol);
}

CheckReport check_cor2(const OperatorTuple& t, const PExponent& p, Sign s,
                       double tol) {
  require_constraint(t, Constraint::SumZero);
  const double pv = p.value();
  const int n = tuple_n(t), d = tuple_d(t);
  double pairsum = pair_sum(t, t, p, s, 2.0);
  double bound = 2.0 * std::pow(static_cast<double>(n), 2.0 / pv) *
                 sum_norm_pows(t, p, 2.0);
  return regime_report_sum_first(InequalityCase::Cor2, p, n, d, s, pairsum,
                                 bound, tol);
}

CheckReport check_orth_th2(const OperatorTuple& t, const PExponent& p, Sign s,
                           double tol) {
  require_constraint(t, Constraint::OrthogonalRanges);
  const double pv = p.value();
  const int n = tuple_n(t), d = tuple_d(t);
  double pairsum = pair_sum(t, t, p, s, 2.0);
  double factor = s == Sign::Plus ? n + 1.0 : n - 1.0;
  double bound = 2.0 * std::pow(static_cast<double>(n), 2.0 / pv - 1.0) *
                 factor * sum_norm_pows(t, p, 2.0);
  return regime_report_sum_first(InequalityCase::OrthTh2, p, n, d, s, pairsum,
                                 bound, tol);
}

std::vector<CheckReport> run_case(InequalityCase c, const CheckInstance& inst,
                                  const PExponent& p, std::optional<Sign> sign,
                                  double tol) {
  if (case_has_sign(c) && !sign)
    throw std::invalid_argument("case requires a sign variant");
  Sign s = sign.value_or(Sign::Plus);
  switch (c) {
    case InequalityCase::Triangle:
      return {check_triangle(inst.a, p, tol)};
    case InequalityCase::ReverseTrianglePositive:
      return {check_reverse_triangle_positive(inst.a, p, tol)};
    case InequalityCase::LemmaA:
      return {check_lemma(inst.a, p, tol).first};
    case InequalityCase::LemmaB:
      return {check_lemma(inst.a, p, tol).second};
    case InequalityCase::ScalarPower: {
      auto [lo, hi] = check_scalar_power(inst.scalars, p, tol);
      return {lo, hi};
    }
    case InequalityCase::Parallelogram:
      if (inst.a.size() < 2)
        throw std::invalid_argument("parallelogram needs two matrices");
      return {check_parallelogram(inst.a.matrices[0], inst.a.matrices[1], tol)};
    case InequalityCase::LorchIdentity:
      return {check_lorch_identity(inst.a, tol)};
    case InequalityCase::Th1:
      if (!inst.b) throw std::invalid_argument("Th1 needs a second tuple");
      return {check_th1(inst.a, *inst.b, p, s, tol)};
    case InequalityCase::Cor1:
      return {check_cor1(inst.a, p, s, tol)};
    case InequalityCase::OrthTh1:
      return {check_orth_th1(inst.a, p, s, tol)};
    case InequalityCase::Th2:
      if (!inst.b) throw std::invalid_argument("Th2 needs a second tuple");
      return {check_th2(inst.a, *inst.b, p, s, tol)};
    case InequalityCase::Cor2:
      return {check_cor2(inst.a, p, s, tol)};
    case InequalityCase::OrthTh2:
      return {check_orth_th2(inst.a, p, s, tol)};
  }
  throw std::logic_error("unreachable case");
}

}  // namespace schatten
