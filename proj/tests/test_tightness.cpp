#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "schatten/tightness.hpp"

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

SearchConfig small_config(InequalityCase c, double p, Sign s) {
  SearchConfig cfg;
  cfg.case_id = c;
  cfg.p = p;
  cfg.n = 3;
  cfg.d = 3;
  cfg.sign = s;
  cfg.restarts = 3;
  cfg.steps = 40;
  cfg.seed = 2024;
  return cfg;
}

}  // namespace

TEST_CASE("ratio hand value and conventions") {
  CheckInstance inst;
  inst.a = diag_sum_zero();
  CHECK(tightness_ratio(InequalityCase::Cor1, inst, PExponent(4),
                        Sign::Minus) ==
        doctest::Approx(1.0 / 6.0).epsilon(1e-13));

  CheckInstance zero;
  zero.a.constraint = Constraint::SumZero;
  zero.a.matrices = {ComplexMatrix(2, 2), ComplexMatrix(2, 2),
                     ComplexMatrix(2, 2)};
  CHECK(tightness_ratio(InequalityCase::Cor1, zero, PExponent(1),
                        Sign::Plus) == 0.0);

  CHECK_THROWS_AS(tightness_ratio(InequalityCase::Cor1, inst, PExponent(2),
                                  Sign::Minus),
                  std::domain_error);
  CHECK_THROWS_AS(tightness_ratio(InequalityCase::LorchIdentity, inst,
                                  PExponent(1), Sign::Minus),
                  std::domain_error);
}

TEST_CASE("optimize_ratio is deterministic and bounded") {
  SearchConfig cfg = small_config(InequalityCase::Cor1, 4.0, Sign::Minus);
  SearchResult a = optimize_ratio(cfg);
  SearchResult b = optimize_ratio(cfg);
  CHECK(a.best_ratio == b.best_ratio);
  CHECK(a.trace.size() == b.trace.size());
  CHECK(search_result_csv(a) == search_result_csv(b));
  CHECK(a.best_ratio <= 1.0 + 1e-8);
  CHECK(a.best_ratio > 0.0);

  double prev = -1.0;
  for (const auto& t : a.trace) {
    CHECK(t.ratio >= prev);
    prev = t.ratio;
  }
}

TEST_CASE("search improves over the starting instance") {
  SearchConfig cfg = small_config(InequalityCase::Cor1, 1.0, Sign::Minus);
  cfg.restarts = 4;
  cfg.steps = 150;
  SearchResult r = optimize_ratio(cfg);
  REQUIRE(!r.trace.empty());
  CHECK(r.best_ratio > r.trace.front().ratio);
}

TEST_CASE("every searchable case and constraint family runs clean") {
  struct Probe {
    InequalityCase c;
    double p;
  };
  for (Probe pr : {Probe{InequalityCase::Triangle, 1.5},
                   Probe{InequalityCase::ReverseTrianglePositive, 0.5},
                   Probe{InequalityCase::LemmaA, 0.5},
                   Probe{InequalityCase::LemmaB, 3.0},
                   Probe{InequalityCase::Th1, 1.0},
                   Probe{InequalityCase::Th2, 4.0},
                   Probe{InequalityCase::Cor2, 1.0},
                   Probe{InequalityCase::OrthTh1, 1.0},
                   Probe{InequalityCase::OrthTh2, 4.0}}) {
    SearchConfig cfg = small_config(pr.c, pr.p, Sign::Minus);
    cfg.restarts = 2;
    cfg.steps = 25;
    SearchResult r = optimize_ratio(cfg);  // throws on any violation
    CHECK(r.best_ratio >= 0.0);
    CHECK(r.best_ratio <= 1.0 + 1e-8);
  }
}

TEST_CASE("best instance still satisfies its constraint") {
  SearchConfig cfg = small_config(InequalityCase::Cor2, 1.0, Sign::Plus);
  SearchResult r = optimize_ratio(cfg);
  CHECK_NOTHROW(r.best.a.validate());

  cfg = small_config(InequalityCase::OrthTh1, 4.0, Sign::Minus);
  r = optimize_ratio(cfg);
  CHECK_NOTHROW(r.best.a.validate());

  cfg = small_config(InequalityCase::Th1, 1.0, Sign::Minus);
  r = optimize_ratio(cfg);
  REQUIRE(r.best.b.has_value());
  CHECK_NOTHROW(validate_cross_orthogonal(r.best.a, *r.best.b));
}

TEST_CASE("ratio continuity under tiny perturbation") {
  GenConfig gc;
  gc.seed = 404;
  gc.n = 3;
  gc.d = 3;
  CheckInstance inst;
  inst.a = sum_zero_tuple(gc);
  for (double p : {0.5, 1.0, 4.0}) {
    double base =
        tightness_ratio(InequalityCase::Cor1, inst, PExponent(p), Sign::Minus);
    CheckInstance moved = inst;
    for (auto& m : moved.a.matrices)
      for (cplx& z : m.entries()) z += cplx(1e-9, -1e-9);
    ComplexMatrix mean =
        cplx(1.0 / static_cast<double>(moved.a.size())) * moved.a.sum();
    for (auto& m : moved.a.matrices) m = m - mean;
    double shifted =
        tightness_ratio(InequalityCase::Cor1, moved, PExponent(p), Sign::Minus);
    CHECK(std::abs(shifted - base) < 1e-5);
  }
}

TEST_CASE("invalid configurations are rejected") {
  SearchConfig cfg = small_config(InequalityCase::Cor1, 2.0, Sign::Minus);
  CHECK_THROWS_AS(optimize_ratio(cfg), std::domain_error);

  cfg = small_config(InequalityCase::Parallelogram, 1.0, Sign::Minus);
  CHECK_THROWS_AS(optimize_ratio(cfg), std::domain_error);

  cfg = small_config(InequalityCase::OrthTh1, 1.0, Sign::Minus);
  cfg.n = 5;
  cfg.d = 3;
  CHECK_THROWS_AS(optimize_ratio(cfg), std::invalid_argument);

  cfg = small_config(InequalityCase::Cor1, 1.0, Sign::Minus);
  cfg.restarts = 0;
  CHECK_THROWS_AS(optimize_ratio(cfg), std::invalid_argument);
}

TEST_CASE("ill-conditioned regime flag") {
  SearchConfig cfg = small_config(InequalityCase::Cor1, 0.25, Sign::Minus);
  cfg.restarts = 1;
  cfg.steps = 10;
  SearchResult r = optimize_ratio(cfg);
  CHECK(r.ill_conditioned);
  CHECK(search_result_csv(r).starts_with("#"));
}

TEST_CASE("sweep rows and modes") {
  SearchConfig base = small_config(InequalityCase::Cor2, 1.0, Sign::Minus);
  base.restarts = 2;
  base.steps = 20;
  auto rows = sweep(base, {1.0, 2.0, 4.0}, SweepMode::Tighten, 10);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].mode == SweepMode::Tighten);
  CHECK(rows[1].mode == SweepMode::Verify);  // p = 2 falls back to verify
  CHECK(rows[1].value < 1e-8);
  CHECK(rows[2].mode == SweepMode::Tighten);

  auto vrows = sweep(base, {2.0}, SweepMode::Verify, 20);
  REQUIRE(vrows.size() == 1);
  CHECK(vrows[0].value < 1e-8);

  CHECK_THROWS_AS(sweep(base, {}, SweepMode::Tighten, 10),
                  std::invalid_argument);
}
