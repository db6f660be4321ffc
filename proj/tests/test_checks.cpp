#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "schatten/checks.hpp"
#include "schatten/eig.hpp"
#include "schatten/verify.hpp"

using namespace schatten;

namespace {

ComplexMatrix rdiag(std::vector<double> d) {
  std::vector<cplx> c(d.begin(), d.end());
  return ComplexMatrix::diagonal(c);
}

OperatorTuple diag_sum_zero() {
  OperatorTuple t;
  t.constraint = Constraint::SumZero;
  t.matrices = {rdiag({1, 0}), rdiag({0, 1}), rdiag({-1, -1})};
  return t;
}

OperatorTuple projection_pair() {
  OperatorTuple t;
  t.constraint = Constraint::OrthogonalRanges;
  t.matrices = {rdiag({1, 0}), rdiag({0, 1})};
  return t;
}

CheckInstance scaled(const CheckInstance& inst, double c) {
  CheckInstance out = inst;
  for (auto& m : out.a.matrices) m = cplx(c) * m;
  if (out.b)
    for (auto& m : out.b->matrices) m = cplx(c) * m;
  for (double& v : out.scalars) v *= std::abs(c);
  return out;
}

}  // namespace

TEST_CASE("triangle hand values and regime gate") {
  OperatorTuple t;
  t.matrices = {ComplexMatrix::identity(2), ComplexMatrix::identity(2)};
  CheckReport r = check_triangle(t, PExponent(1));
  CHECK(r.lhs == doctest::Approx(4).epsilon(1e-14));
  CHECK(r.rhs == doctest::Approx(4).epsilon(1e-14));
  CHECK(r.verdict == Verdict::Holds);

  CHECK(check_triangle(t, PExponent(0.5)).verdict == Verdict::Inapplicable);
}

TEST_CASE("reverse triangle for positives") {
  OperatorTuple t;
  t.constraint = Constraint::PositiveEach;
  t.matrices = {rdiag({1, 0}), rdiag({0, 1})};
  CheckReport r = check_reverse_triangle_positive(t, PExponent(0.5));
  CHECK(r.lhs == doctest::Approx(2).epsilon(1e-14));
  CHECK(r.rhs == doctest::Approx(4).epsilon(1e-14));
  CHECK(r.verdict == Verdict::Holds);

  CHECK(check_reverse_triangle_positive(t, PExponent(1.5)).verdict ==
        Verdict::Inapplicable);

  OperatorTuple bad = t;
  bad.constraint = Constraint::Free;
  CHECK_THROWS_AS(check_reverse_triangle_positive(bad, PExponent(0.5)),
                  std::invalid_argument);

  OperatorTuple notpsd;
  notpsd.constraint = Constraint::PositiveEach;
  notpsd.matrices = {rdiag({1, -1})};
  CHECK_THROWS_AS(check_reverse_triangle_positive(notpsd, PExponent(0.5)),
                  std::invalid_argument);
}

TEST_CASE("lemma chain: hand values and equalities") {
  OperatorTuple t;
  t.constraint = Constraint::PositiveEach;
  t.matrices = {rdiag({1, 0}), rdiag({1, 0})};
  auto [lo, hi] = check_lemma(t, PExponent(0.5));
  CHECK(lo.lhs == doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));
  CHECK(lo.rhs == doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));
  CHECK(hi.rhs == doctest::Approx(2).epsilon(1e-13));

  GenConfig cfg;
  cfg.seed = 9;
  OperatorTuple pt = positive_tuple(cfg);
  auto [l1, h1] = check_lemma(pt, PExponent(1));
  CHECK(std::abs(l1.rel_slack) < 1e-10);
  CHECK(std::abs(h1.rel_slack) < 1e-10);

  for (double p : {0.25, 0.5, 1.5, 4.0}) {
    auto [lp, hp] = check_lemma(pt, PExponent(p));
    CHECK(lp.verdict == Verdict::Holds);
    CHECK(hp.verdict == Verdict::Holds);
  }
}

TEST_CASE("scalar power chain") {
  auto [lo, hi] = check_scalar_power({1, 1}, PExponent(0.5));
  CHECK(lo.lhs == doctest::Approx(std::sqrt(2.0)));
  CHECK(lo.rhs == doctest::Approx(std::sqrt(2.0)));
  CHECK(hi.rhs == doctest::Approx(2));

  auto [lo2, hi2] = check_scalar_power({1, 1}, PExponent(2));
  CHECK(lo2.lhs == doctest::Approx(2));
  CHECK(lo2.rhs == doctest::Approx(4));
  CHECK(hi2.lhs == doctest::Approx(4));
  CHECK(hi2.rhs == doctest::Approx(4));

  auto [lo3, hi3] = check_scalar_power({2.5}, PExponent(3));
  CHECK(std::abs(lo3.rel_slack) < 1e-14);
  CHECK(std::abs(hi3.rel_slack) < 1e-14);

  CHECK_THROWS_AS(check_scalar_power({-1.0}, PExponent(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_scalar_power({}, PExponent(1)), std::invalid_argument);
}

TEST_CASE("parallelogram law") {
  ComplexMatrix i2 = ComplexMatrix::identity(2);
  CheckReport r = check_parallelogram(i2, i2);
  CHECK(r.lhs == doctest::Approx(8));
  CHECK(r.rhs == doctest::Approx(8));
  CHECK(r.verdict == Verdict::EqualityHolds);

  r = check_parallelogram(rdiag({1, 0}), rdiag({0, 1}));
  CHECK(r.lhs == doctest::Approx(4));
  CHECK(r.rhs == doctest::Approx(4));

  CHECK_THROWS_AS(check_parallelogram(i2, ComplexMatrix(3, 3)),
                  std::invalid_argument);
}

TEST_CASE("Lorch identity") {
  CheckReport r = check_lorch_identity(diag_sum_zero());
  CHECK(r.lhs == doctest::Approx(24).epsilon(1e-14));
  CHECK(r.rhs == doctest::Approx(24).epsilon(1e-14));
  CHECK(r.verdict == Verdict::EqualityHolds);

  OperatorTuple two;
  two.constraint = Constraint::SumZero;
  two.matrices = {rdiag({1, 1}), rdiag({-1, -1})};
  CHECK_THROWS_AS(check_lorch_identity(two), std::invalid_argument);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.n = 5;
    cfg.d = 4;
    CHECK(check_lorch_identity(sum_zero_tuple(cfg)).verdict ==
          Verdict::EqualityHolds);
  }
}

TEST_CASE("Th1 hand value and p=2 collapse") {
  OperatorTuple t = diag_sum_zero();
  t.constraint = Constraint::Free;
  CheckReport r = check_th1(t, t, PExponent(4), Sign::Minus);
  CHECK(r.lhs == doctest::Approx(72).epsilon(1e-13));
  CHECK(r.rhs == doctest::Approx(432).epsilon(1e-13));
  CHECK(r.verdict == Verdict::Holds);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    auto [a, b] = cross_orthogonal_pair(cfg);
    for (Sign s : {Sign::Plus, Sign::Minus})
      CHECK(check_th1(a, b, PExponent(2), s).verdict ==
            Verdict::EqualityHolds);
  }
}

TEST_CASE("Th1 rejects non-admissible pairs") {
  GenConfig ca, cb;
  ca.seed = 1;
  cb.seed = 2;
  OperatorTuple a, b;
  a.matrices = {random_matrix(ca)};
  b.matrices = {random_matrix(cb)};
  CHECK_THROWS_AS(check_th1(a, b, PExponent(1), Sign::Plus),
                  std::invalid_argument);
}

TEST_CASE("Cor1 hand values") {
  CheckReport r = check_cor1(diag_sum_zero(), PExponent(4), Sign::Minus);
  CHECK(r.lhs == doctest::Approx(72).epsilon(1e-13));
  CHECK(r.rhs == doctest::Approx(432).epsilon(1e-13));

  r = check_cor1(diag_sum_zero(), PExponent(2), Sign::Plus);
  CHECK(r.lhs == doctest::Approx(24).epsilon(1e-13));
  CHECK(r.rhs == doctest::Approx(24).epsilon(1e-13));
  CHECK(r.verdict == Verdict::EqualityHolds);

  OperatorTuple freet = diag_sum_zero();
  freet.constraint = Constraint::Free;
  CHECK_THROWS_AS(check_cor1(freet, PExponent(1), Sign::Plus),
                  std::invalid_argument);
}

TEST_CASE("OrthTh1 hand values") {
  CheckReport r = check_orth_th1(projection_pair(), PExponent(2), Sign::Minus);
  CHECK(r.lhs == doctest::Approx(4).epsilon(1e-13));
  CHECK(r.rhs == doctest::Approx(4).epsilon(1e-13));
  r = check_orth_th1(projection_pair(), PExponent(2), Sign::Plus);
  CHECK(r.lhs == doctest::Approx(12).epsilon(1e-13));
  CHECK(r.rhs == doctest::Approx(12).epsilon(1e-13));
}

TEST_CASE("Th2 hand value and p=2 collapse") {
  OperatorTuple t = diag_sum_zero();
  t.constraint = Constraint::Free;
  CheckReport r = check_th2(t, t, PExponent(2), Sign::Minus);
  CHECK(r.lhs == doctest::Approx(24).epsilon(1e-12));
  CHECK(r.rhs == doctest::Approx(24).epsilon(1e-12));

  for (std::uint64_t seed = 20; seed < 25; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    auto [a, b] = cross_orthogonal_pair(cfg);
    for (Sign s : {Sign::Plus, Sign::Minus})
      CHECK(check_th2(a, b, PExponent(2), s).verdict ==
            Verdict::EqualityHolds);
  }
}

TEST_CASE("Cor2 hand values") {
  CheckReport r = check_cor2(diag_sum_zero(), PExponent(1), Sign::Minus);
  CHECK(r.lhs == doctest::Approx(44).epsilon(1e-13));
  CHECK(r.rhs == doctest::Approx(108).epsilon(1e-13));
  CHECK(r.verdict == Verdict::Holds);

  r = check_cor2(diag_sum_zero(), PExponent(2), Sign::Minus);
  CHECK(r.lhs == doctest::Approx(24).epsilon(1e-13));
  CHECK(r.rhs == doctest::Approx(24).epsilon(1e-13));
}

TEST_CASE("OrthTh2 hand values") {
  CheckReport r = check_orth_th2(projection_pair(), PExponent(2), Sign::Minus);
  CHECK(r.lhs == doctest::Approx(4).epsilon(1e-13));
  CHECK(r.rhs == doctest::Approx(4).epsilon(1e-13));
  r = check_orth_th2(projection_pair(), PExponent(2), Sign::Plus);
  CHECK(r.lhs == doctest::Approx(12).epsilon(1e-13));
  CHECK(r.rhs == doctest::Approx(12).epsilon(1e-13));
}

TEST_CASE("proof-chain identity: sum |A_i +- B_j|^2 = n(sum |A_i|^2 + sum |B_i|^2)") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    auto [a, b] = cross_orthogonal_pair(cfg);
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      const std::size_t d = a.dim();
      ComplexMatrix lhs(d, d);
      for (const auto& ai : a.matrices)
        for (const auto& bj : b.matrices) {
          ComplexMatrix c = s == Sign::Plus ? ai + bj : ai - bj;
          lhs = lhs + gram(c);
        }
      ComplexMatrix rhs(d, d);
      for (const auto& ai : a.matrices) rhs = rhs + gram(ai);
      for (const auto& bi : b.matrices) rhs = rhs + gram(bi);
      rhs = cplx(static_cast<double>(a.size())) * rhs;
      double scale = std::max(1e-300, frobenius_norm(rhs));
      CHECK(frobenius_norm(lhs - rhs) / scale < 1e-9);
    }
  }
}

TEST_CASE("scale invariance of rel_slack") {
  GenConfig cfg;
  cfg.seed = 77;
  CheckInstance inst;
  inst.a = sum_zero_tuple(cfg);
  for (double p : {1.0, 4.0}) {
    auto base = run_case(InequalityCase::Cor1, inst, PExponent(p), Sign::Minus);
    auto big = run_case(InequalityCase::Cor1, scaled(inst, 37.0), PExponent(p),
                        Sign::Minus);
    CHECK(std::abs(base[0].rel_slack - big[0].rel_slack) < 1e-9);
  }
}

TEST_CASE("run_case dispatch") {
  CheckInstance inst;
  inst.a = diag_sum_zero();
  auto rs = run_case(InequalityCase::LorchIdentity, inst, PExponent(2),
                     std::nullopt);
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].verdict == Verdict::EqualityHolds);

  CheckInstance sp;
  sp.scalars = {1.0, 2.0, 3.0};
  CHECK(run_case(InequalityCase::ScalarPower, sp, PExponent(0.5), std::nullopt)
            .size() == 2);

  CHECK_THROWS_AS(
      run_case(InequalityCase::Cor1, inst, PExponent(1), std::nullopt),
      std::invalid_argument);

  CheckInstance freeinst;
  freeinst.a = diag_sum_zero();
  freeinst.a.constraint = Constraint::Free;
  CHECK_THROWS_AS(run_case(InequalityCase::Cor1, freeinst, PExponent(1),
                           Sign::Minus),
                  std::invalid_argument);
}

TEST_CASE("all-zero instances never divide by zero") {
  OperatorTuple z;
  z.constraint = Constraint::SumZero;
  z.matrices = {ComplexMatrix(2, 2), ComplexMatrix(2, 2), ComplexMatrix(2, 2)};
  CheckReport r = check_cor1(z, PExponent(1), Sign::Minus);
  CHECK(r.verdict == Verdict::Holds);
  CHECK(r.rel_slack == 0.0);
  CHECK(check_lorch_identity(z).verdict == Verdict::EqualityHolds);
}
