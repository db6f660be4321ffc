#include "schatten/selftest.hpp"

#include <cmath>

#include "schatten/checks.hpp"
#include "schatten/eig.hpp"
#include "schatten/gen.hpp"
#include "schatten/tightness.hpp"
#include "schatten/verify.hpp"

namespace schatten {

namespace {

constexpr double kTol = 1e-12;

bool near(double a, double b, double tol = kTol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

bool near_matrix(const ComplexMatrix& a, const ComplexMatrix& b,
                 double tol = kTol) {
  if (!a.same_shape(b)) return false;
  double scale = std::max({1.0, frobenius_norm(a), frobenius_norm(b)});
  return frobenius_norm(a - b) <= tol * scale;
}

ComplexMatrix rdiag(std::vector<double> d) {
  std::vector<cplx> c(d.begin(), d.end());
  return ComplexMatrix::diagonal(c);
}

ComplexMatrix mat2(cplx a, cplx b, cplx c, cplx d) {
  return ComplexMatrix(2, 2, {a, b, c, d});
}

// the sum-zero fixture used throughout: diag(1,0), diag(0,1), diag(-1,-1)
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

OperatorTuple projection_pair_positive() {
  OperatorTuple t = projection_pair();
  t.constraint = Constraint::PositiveEach;
  return t;
}

OperatorTuple zero_tuple(Constraint c, std::size_t n, std::size_t d) {
  OperatorTuple t;
  t.constraint = c;
  for (std::size_t i = 0; i < n; ++i) t.matrices.emplace_back(d, d);
  return t;
}

bool throws_invalid(const std::function<void()>& f) {
  try {
    f();
  } catch (const std::invalid_argument&) {
    return true;
  } catch (const std::exception&) {
    return false;
  }
  return false;
}

bool throws_domain(const std::function<void()>& f) {
  try {
    f();
  } catch (const std::domain_error&) {
    return true;
  } catch (const std::exception&) {
    return false;
  }
  return false;
}

std::vector<SelfTestItem> build_items() {
  std::vector<SelfTestItem> v;
  auto add = [&](std::string name, std::function<bool()> f) {
    v.push_back({std::move(name), std::move(f)});
  };

  const cplx I(0.0, 1.0);

  // ---- adjoint ----
  add("adjoint.1x1-conjugate", [=] {
    ComplexMatrix m(1, 1, {I});
    return adjoint(m)(0, 0) == cplx(0.0, -1.0);
  });
  add("adjoint.real-transpose", [] {
    return near_matrix(adjoint(mat2(1, 2, 3, 4)), mat2(1, 3, 2, 4));
  });
  add("adjoint.involution", [] {
    GenConfig cfg;
    cfg.seed = 42;
    ComplexMatrix m = random_matrix(cfg);
    return near_matrix(adjoint(adjoint(m)), m, 0.0);
  });

  // ---- matmul ----
  add("matmul.identity", [] {
    GenConfig cfg;
    cfg.seed = 7;
    ComplexMatrix m = random_matrix(cfg);
    return near_matrix(matmul(ComplexMatrix::identity(cfg.d), m), m);
  });
  add("matmul.nilpotent", [] {
    ComplexMatrix n = mat2(0, 1, 0, 0);
    return frobenius_norm(matmul(n, n)) == 0.0;
  });
  add("matmul.ones-squared", [] {
    ComplexMatrix ones = mat2(1, 1, 1, 1);
    return near_matrix(matmul(ones, ones), mat2(2, 2, 2, 2));
  });

  // ---- gram ----
  add("gram.diagonal", [] {
    return near_matrix(gram(rdiag({3, -4})), rdiag({9, 16}));
  });
  add("gram.rank-one-shift", [] {
    return near_matrix(gram(mat2(0, 1, 0, 0)), rdiag({0, 1}));
  });
  add("gram.unitary", [] {
    Rng rng(11);
    ComplexMatrix u = random_unitary(4, rng);
    return near_matrix(gram(u), ComplexMatrix::identity(4), 1e-12);
  });

  // ---- hermitian_eigenvalues ----
  add("eig.diagonal", [] {
    auto ev = hermitian_eigenvalues(rdiag({4, 0}));
    return near(ev[0], 4) && near(ev[1], 0);
  });
  add("eig.2x2-offdiag", [] {
    auto ev = hermitian_eigenvalues(mat2(2, 1, 1, 2));
    return near(ev[0], 3) && near(ev[1], 1);
  });
  add("eig.2x2-singular", [] {
    auto ev = hermitian_eigenvalues(mat2(2, 2, 2, 2));
    return near(ev[0], 4) && near(ev[1], 0, 1e-10);
  });

  // ---- singular_values ----
  add("sv.diagonal-abs", [] {
    auto sv = singular_values(rdiag({3, -4}));
    return near(sv[0], 4) && near(sv[1], 3);
  });
  add("sv.rank-one", [] {
    auto sv = singular_values(mat2(0, 1, 0, 0));
    return near(sv[0], 1) && near(sv[1], 0, 1e-10);
  });
  add("sv.ones", [] {
    auto sv = singular_values(mat2(1, 1, 1, 1));
    return near(sv[0], 2) && near(sv[1], 0, 1e-10);
  });

  // ---- psd_sqrt ----
  add("sqrt.diagonal", [] {
    return near_matrix(psd_sqrt(rdiag({4, 9})), rdiag({2, 3}));
  });
  add("sqrt.2x2", [] {
    double s3 = std::sqrt(3.0);
    ComplexMatrix want = mat2((s3 + 1) / 2, (s3 - 1) / 2,
                              (s3 - 1) / 2, (s3 + 1) / 2);
    return near_matrix(psd_sqrt(mat2(2, 1, 1, 2)), want);
  });
  add("sqrt.zero", [] {
    return frobenius_norm(psd_sqrt(ComplexMatrix(3, 3))) == 0.0;
  });

  // ---- trace_inner ----
  add("inner.identity", [] {
    ComplexMatrix i2 = ComplexMatrix::identity(2);
    return near(trace_inner(i2, i2).real(), 2) &&
           near(trace_inner(i2, i2).imag(), 0);
  });
  add("inner.diagonals", [] {
    cplx r = trace_inner(rdiag({1, 2}), rdiag({3, 4}));
    return near(r.real(), 11) && near(r.imag(), 0);
  });
  add("inner.hermitian-symmetry", [] {
    GenConfig ca, cb;
    ca.seed = 1;
    cb.seed = 2;
    ComplexMatrix a = random_matrix(ca), b = random_matrix(cb);
    cplx ab = trace_inner(a, b), ba = trace_inner(b, a);
    return near(ab.real(), ba.real(), 1e-10) &&
           near(ab.imag(), -ba.imag(), 1e-10);
  });

  // ---- schatten_norm ----
  add("norm.identity", [] {
    for (double p : {0.5, 1.0, 2.0, 3.0})
      if (!near(schatten_norm(ComplexMatrix::identity(4), PExponent(p)),
                std::pow(4.0, 1.0 / p)))
        return false;
    return true;
  });
  add("norm.diag-p1-p2", [] {
    ComplexMatrix m = rdiag({3, -4});
    return near(schatten_norm(m, PExponent(1)), 7) &&
           near(schatten_norm(m, PExponent(2)), 5);
  });
  add("norm.diag-p-half", [] {
    double want = (2.0 + std::sqrt(3.0)) * (2.0 + std::sqrt(3.0));
    return near(schatten_norm(rdiag({3, -4}), PExponent(0.5)), want);
  });

  // ---- schatten_norm_psd ----
  add("norm-psd.identity-p-half", [] {
    return near(schatten_norm_psd(rdiag({1, 1}), PExponent(0.5)), 4);
  });
  add("norm-psd.gram-identity", [] {
    GenConfig cfg;
    cfg.seed = 5;
    ComplexMatrix a = random_matrix(cfg);
    double np = schatten_norm(a, PExponent(3));
    return near(schatten_norm_psd(gram(a), PExponent(1.5)), np * np, 1e-10);
  });
  add("norm-psd.zero", [] {
    return schatten_norm_psd(ComplexMatrix(3, 3), PExponent(0.7)) == 0.0;
  });

  // ---- hilbert_schmidt_norm ----
  add("hs.entrywise", [] {
    return near(hilbert_schmidt_norm(mat2(3, 4, 0, 0)), 5);
  });
  add("hs.identity", [] {
    return near(hilbert_schmidt_norm(ComplexMatrix::identity(5)),
                std::sqrt(5.0));
  });
  add("hs.matches-p2", [] {
    GenConfig cfg;
    cfg.seed = 9;
    ComplexMatrix a = random_matrix(cfg);
    return near(hilbert_schmidt_norm(a), schatten_norm(a, PExponent(2)),
                1e-12);
  });

  // ---- triangle ----
  add("triangle.zero", [] {
    CheckReport r = check_triangle(zero_tuple(Constraint::Free, 3, 2),
                                   PExponent(1.5));
    return r.verdict == Verdict::Holds && r.lhs == 0.0 && r.rhs == 0.0;
  });
  add("triangle.identity-equality", [] {
    OperatorTuple t;
    t.matrices = {ComplexMatrix::identity(2), ComplexMatrix::identity(2)};
    CheckReport r = check_triangle(t, PExponent(1));
    return near(r.lhs, 4) && near(r.rhs, 4);
  });
  add("triangle.quasi-gate", [] {
    CheckReport r = check_triangle(zero_tuple(Constraint::Free, 2, 2),
                                   PExponent(0.5));
    return r.verdict == Verdict::Inapplicable;
  });

  // ---- reverse triangle for positives ----
  add("revtri.projections", [] {
    CheckReport r =
        check_reverse_triangle_positive(projection_pair_positive(),
                                        PExponent(0.5));
    return near(r.lhs, 2) && near(r.rhs, 4) && r.verdict == Verdict::Holds;
  });
  add("revtri.single", [] {
    OperatorTuple t;
    t.constraint = Constraint::PositiveEach;
    t.matrices = {rdiag({2, 3})};
    CheckReport r = check_reverse_triangle_positive(t, PExponent(0.5));
    return near(r.lhs, r.rhs);
  });
  add("revtri.p1-equality", [] {
    GenConfig cfg;
    cfg.seed = 3;
    CheckReport r =
        check_reverse_triangle_positive(positive_tuple(cfg), PExponent(1));
    return std::abs(r.rel_slack) <= 1e-10;
  });

  // ---- lemma ----
  add("lemma.p-half-left-equality", [] {
    OperatorTuple t;
    t.constraint = Constraint::PositiveEach;
    t.matrices = {rdiag({1, 0}), rdiag({1, 0})};
    auto [lo, hi] = check_lemma(t, PExponent(0.5));
    double r2 = std::sqrt(2.0);
    return near(lo.lhs, r2) && near(lo.rhs, r2) && near(hi.rhs, 2);
  });
  add("lemma.identical-left-equality", [] {
    GenConfig cfg;
    cfg.seed = 17;
    ComplexMatrix a = random_psd(cfg);
    OperatorTuple t;
    t.constraint = Constraint::PositiveEach;
    t.matrices = {a, a, a};
    for (double p : {0.5, 1.0, 3.0}) {
      auto [lo, hi] = check_lemma(t, PExponent(p));
      if (std::abs(lo.rel_slack) > 1e-10) return false;
    }
    return true;
  });
  add("lemma.p1-both-equalities", [] {
    GenConfig cfg;
    cfg.seed = 23;
    auto [lo, hi] = check_lemma(positive_tuple(cfg), PExponent(1));
    return std::abs(lo.rel_slack) <= 1e-10 && std::abs(hi.rel_slack) <= 1e-10;
  });

  // ---- scalar power ----
  add("scalar.ones-p-half", [] {
    auto [lo, hi] = check_scalar_power({1, 1}, PExponent(0.5));
    double r2 = std::sqrt(2.0);
    return near(lo.lhs, r2) && near(lo.rhs, r2) && near(hi.rhs, 2);
  });
  add("scalar.singleton", [] {
    auto [lo, hi] = check_scalar_power({3.7}, PExponent(4));
    return std::abs(lo.rel_slack) <= kTol && std::abs(hi.rel_slack) <= kTol;
  });
  add("scalar.ones-p2", [] {
    auto [lo, hi] = check_scalar_power({1, 1}, PExponent(2));
    return near(lo.lhs, 2) && near(lo.rhs, 4) && near(hi.lhs, 4) &&
           near(hi.rhs, 4);
  });

  // ---- parallelogram ----
  add("parallelogram.identical", [] {
    ComplexMatrix i2 = ComplexMatrix::identity(2);
    CheckReport r = check_parallelogram(i2, i2);
    return near(r.lhs, 8) && near(r.rhs, 8) &&
           r.verdict == Verdict::EqualityHolds;
  });
  add("parallelogram.projections", [] {
    CheckReport r = check_parallelogram(rdiag({1, 0}), rdiag({0, 1}));
    return near(r.lhs, 4) && near(r.rhs, 4);
  });
  add("parallelogram.zero-b", [] {
    GenConfig cfg;
    cfg.seed = 31;
    ComplexMatrix a = random_matrix(cfg);
    CheckReport r = check_parallelogram(a, ComplexMatrix(cfg.d, cfg.d));
    return r.verdict == Verdict::EqualityHolds;
  });

  // ---- Lorch identity ----
  add("lorch.diag-triple", [] {
    CheckReport r = check_lorch_identity(diag_sum_zero());
    return near(r.lhs, 24) && near(r.rhs, 24) &&
           r.verdict == Verdict::EqualityHolds;
  });
  add("lorch.zero", [] {
    CheckReport r = check_lorch_identity(zero_tuple(Constraint::SumZero, 3, 2));
    return r.verdict == Verdict::EqualityHolds && r.lhs == 0.0;
  });
  add("lorch.random", [] {
    GenConfig cfg;
    cfg.seed = 37;
    cfg.n = 4;
    CheckReport r = check_lorch_identity(sum_zero_tuple(cfg));
    return r.verdict == Verdict::EqualityHolds;
  });

  // ---- Th1 ----
  add("th1.zero", [] {
    OperatorTuple z = zero_tuple(Constraint::Free, 2, 2);
    CheckReport r = check_th1(z, z, PExponent(1), Sign::Plus);
    return r.verdict == Verdict::Holds && r.lhs == 0.0 && r.rhs == 0.0;
  });
  add("th1.p2-equality", [] {
    GenConfig cfg;
    cfg.seed = 41;
    auto [a, b] = cross_orthogonal_pair(cfg);
    return check_th1(a, b, PExponent(2), Sign::Minus).verdict ==
               Verdict::EqualityHolds &&
           check_th1(a, b, PExponent(2), Sign::Plus).verdict ==
               Verdict::EqualityHolds;
  });
  add("th1.diag-tuple-p4", [] {
    OperatorTuple t = diag_sum_zero();
    t.constraint = Constraint::Free;
    CheckReport r = check_th1(t, t, PExponent(4), Sign::Minus);
    return near(r.lhs, 72) && near(r.rhs, 432) && r.verdict == Verdict::Holds;
  });

  // ---- Cor1 ----
  add("cor1.diag-p4-minus", [] {
    CheckReport r = check_cor1(diag_sum_zero(), PExponent(4), Sign::Minus);
    return near(r.lhs, 72) && near(r.rhs, 432) && r.verdict == Verdict::Holds;
  });
  add("cor1.diag-p2-plus", [] {
    CheckReport r = check_cor1(diag_sum_zero(), PExponent(2), Sign::Plus);
    return near(r.lhs, 24) && near(r.rhs, 24) &&
           r.verdict == Verdict::EqualityHolds;
  });
  add("cor1.random-p1", [] {
    GenConfig cfg;
    cfg.seed = 43;
    CheckReport r =
        check_cor1(sum_zero_tuple(cfg), PExponent(1), Sign::Minus);
    return r.verdict == Verdict::Holds;
  });

  // ---- OrthTh1 ----
  add("orth1.p2-minus", [] {
    CheckReport r =
        check_orth_th1(projection_pair(), PExponent(2), Sign::Minus);
    return near(r.lhs, 4) && near(r.rhs, 4) &&
           r.verdict == Verdict::EqualityHolds;
  });
  add("orth1.p2-plus", [] {
    CheckReport r =
        check_orth_th1(projection_pair(), PExponent(2), Sign::Plus);
    return near(r.lhs, 12) && near(r.rhs, 12);
  });
  add("orth1.zero", [] {
    CheckReport r = check_orth_th1(zero_tuple(Constraint::OrthogonalRanges, 2, 4),
                                   PExponent(1), Sign::Minus);
    return r.verdict == Verdict::Holds && r.lhs == 0.0;
  });

  // ---- Th2 ----
  add("th2.p2-equality", [] {
    GenConfig cfg;
    cfg.seed = 47;
    auto [a, b] = cross_orthogonal_pair(cfg);
    return check_th2(a, b, PExponent(2), Sign::Minus).verdict ==
           Verdict::EqualityHolds;
  });
  add("th2.diag-p2", [] {
    OperatorTuple t = diag_sum_zero();
    t.constraint = Constraint::Free;
    CheckReport r = check_th2(t, t, PExponent(2), Sign::Minus);
    return near(r.lhs, 24) && near(r.rhs, 24);
  });
  add("th2.zero", [] {
    OperatorTuple z = zero_tuple(Constraint::Free, 2, 2);
    CheckReport r = check_th2(z, z, PExponent(1), Sign::Plus);
    return r.verdict == Verdict::Holds && r.lhs == 0.0;
  });

  // ---- Cor2 ----
  add("cor2.diag-p1-minus", [] {
    CheckReport r = check_cor2(diag_sum_zero(), PExponent(1), Sign::Minus);
    return near(r.lhs, 44) && near(r.rhs, 108) && r.verdict == Verdict::Holds;
  });
  add("cor2.diag-p2", [] {
    CheckReport r = check_cor2(diag_sum_zero(), PExponent(2), Sign::Minus);
    return near(r.lhs, 24) && near(r.rhs, 24) &&
           r.verdict == Verdict::EqualityHolds;
  });
  add("cor2.zero", [] {
    CheckReport r = check_cor2(zero_tuple(Constraint::SumZero, 3, 2),
                               PExponent(1), Sign::Plus);
    return r.verdict == Verdict::Holds && r.lhs == 0.0;
  });

  // ---- OrthTh2 ----
  add("orth2.p2-minus", [] {
    CheckReport r =
        check_orth_th2(projection_pair(), PExponent(2), Sign::Minus);
    return near(r.lhs, 4) && near(r.rhs, 4);
  });
  add("orth2.p2-plus", [] {
    CheckReport r =
        check_orth_th2(projection_pair(), PExponent(2), Sign::Plus);
    return near(r.lhs, 12) && near(r.rhs, 12);
  });
  add("orth2.zero", [] {
    CheckReport r = check_orth_th2(zero_tuple(Constraint::OrthogonalRanges, 2, 4),
                                   PExponent(3), Sign::Plus);
    return r.verdict == Verdict::Holds && r.lhs == 0.0;
  });

  // ---- run_case gates ----
  add("dispatch.lorch", [] {
    CheckInstance inst;
    inst.a = diag_sum_zero();
    auto rs = run_case(InequalityCase::LorchIdentity, inst, PExponent(2),
                       std::nullopt);
    return rs.size() == 1 && rs[0].verdict == Verdict::EqualityHolds;
  });
  add("dispatch.regime-gate", [] {
    CheckInstance inst;
    inst.a = zero_tuple(Constraint::Free, 2, 2);
    auto rs =
        run_case(InequalityCase::Triangle, inst, PExponent(0.5), std::nullopt);
    return rs[0].verdict == Verdict::Inapplicable;
  });
  add("dispatch.constraint-gate", [] {
    CheckInstance inst;
    inst.a = zero_tuple(Constraint::Free, 3, 2);
    return throws_invalid([&] {
      run_case(InequalityCase::Cor1, inst, PExponent(1), Sign::Minus);
    });
  });

  // ---- generators ----
  add("gen.matrix-deterministic", [] {
    GenConfig cfg;
    cfg.seed = 99;
    return near_matrix(random_matrix(cfg), random_matrix(cfg), 0.0);
  });
  add("gen.matrix-seed-sensitive", [] {
    GenConfig a, b;
    a.seed = 1;
    b.seed = 2;
    return frobenius_norm(random_matrix(a) - random_matrix(b)) > 1e-6;
  });
  add("gen.psd-valid", [] {
    GenConfig cfg;
    cfg.seed = 3;
    OperatorTuple t;
    t.constraint = Constraint::PositiveEach;
    t.matrices = {random_psd(cfg)};
    t.validate();
    return true;
  });
  add("gen.sum-zero-valid", [] {
    GenConfig cfg;
    cfg.seed = 5;
    sum_zero_tuple(cfg).validate();
    GenConfig two = cfg;
    two.n = 2;
    OperatorTuple t = sum_zero_tuple(two);
    return near_matrix(t.matrices[1], -t.matrices[0], 0.0);
  });
  add("gen.cross-orth-valid", [] {
    GenConfig cfg;
    cfg.seed = 7;
    auto [a, b] = cross_orthogonal_pair(cfg);
    validate_cross_orthogonal(a, b);
    return true;
  });
  add("gen.orth-ranges-valid", [] {
    GenConfig cfg;
    cfg.seed = 9;
    cfg.n = 2;
    cfg.d = 2;
    orthogonal_ranges_tuple(cfg).validate();
    GenConfig bad = cfg;
    bad.n = 3;
    return throws_invalid([&] { orthogonal_ranges_tuple(bad); });
  });

  // ---- tightness ----
  add("ratio.diag-p4", [] {
    CheckInstance inst;
    inst.a = diag_sum_zero();
    double r = tightness_ratio(InequalityCase::Cor1, inst, PExponent(4),
                               Sign::Minus);
    return near(r, 1.0 / 6.0);
  });
  add("ratio.zero-instance", [] {
    CheckInstance inst;
    inst.a = zero_tuple(Constraint::SumZero, 3, 2);
    return tightness_ratio(InequalityCase::Cor1, inst, PExponent(1),
                           Sign::Plus) == 0.0;
  });
  add("ratio.p2-rejected", [] {
    CheckInstance inst;
    inst.a = diag_sum_zero();
    return throws_domain([&] {
      tightness_ratio(InequalityCase::Cor1, inst, PExponent(2), Sign::Minus);
    });
  });
  add("search.deterministic", [] {
    SearchConfig cfg;
    cfg.case_id = InequalityCase::Cor1;
    cfg.p = 4;
    cfg.n = 3;
    cfg.d = 2;
    cfg.restarts = 2;
    cfg.steps = 30;
    cfg.seed = 123;
    SearchResult a = optimize_ratio(cfg), b = optimize_ratio(cfg);
    if (a.best_ratio != b.best_ratio || a.trace.size() != b.trace.size())
      return false;
    double prev = -1.0;
    for (const auto& t : a.trace) {
      if (t.ratio < prev) return false;
      prev = t.ratio;
    }
    return a.best_ratio <= 1.0 + 1e-8;
  });

  return v;
}

}  // namespace

const std::vector<SelfTestItem>& selftest_items() {
  static const std::vector<SelfTestItem> items = build_items();
  return items;
}

std::vector<std::string> run_selftest() {
  std::vector<std::string> failures;
  for (const auto& item : selftest_items()) {
    bool ok = false;
    try {
      ok = item.run();
    } catch (const std::exception&) {
      ok = false;
    }
    if (!ok) failures.push_back(item.name);
  }
  return failures;
}

}  // namespace schatten
