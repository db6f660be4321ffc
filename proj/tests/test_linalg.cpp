#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "schatten/eig.hpp"
#include "schatten/gen.hpp"
#include "schatten/matrix.hpp"

using namespace schatten;

namespace {

ComplexMatrix rdiag(std::vector<double> d) {
  std::vector<cplx> c(d.begin(), d.end());
  return ComplexMatrix::diagonal(c);
}

double rel_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return frobenius_norm(a - b) /
         std::max({1e-300, frobenius_norm(a), frobenius_norm(b)});
}

}  // namespace

TEST_CASE("adjoint basics") {
  ComplexMatrix m(1, 1, {cplx(0, 1)});
  CHECK(adjoint(m)(0, 0) == cplx(0, -1));

  ComplexMatrix r(2, 2, {1, 2, 3, 4});
  ComplexMatrix rt = adjoint(r);
  CHECK(rt(0, 1) == cplx(3));
  CHECK(rt(1, 0) == cplx(2));

  GenConfig cfg;
  cfg.seed = 12;
  ComplexMatrix x = random_matrix(cfg);
  CHECK(frobenius_norm(adjoint(adjoint(x)) - x) == 0.0);
}

TEST_CASE("matmul dimension checks and values") {
  ComplexMatrix a(2, 3);
  ComplexMatrix b(2, 2);
  CHECK_THROWS_AS(matmul(a, b), std::invalid_argument);

  ComplexMatrix n(2, 2, {0, 1, 0, 0});
  CHECK(frobenius_norm(matmul(n, n)) == 0.0);

  ComplexMatrix ones(2, 2, {1, 1, 1, 1});
  ComplexMatrix sq = matmul(ones, ones);
  CHECK(sq(0, 0) == cplx(2));
  CHECK(sq(1, 1) == cplx(2));
}

TEST_CASE("gram is Hermitian PSD") {
  CHECK(rel_diff(gram(rdiag({3, -4})), rdiag({9, 16})) < 1e-15);
  CHECK(rel_diff(gram(ComplexMatrix(2, 2, {0, 1, 0, 0})), rdiag({0, 1})) <
        1e-15);

  Rng rng(77);
  ComplexMatrix u = random_unitary(5, rng);
  CHECK(rel_diff(gram(u), ComplexMatrix::identity(5)) < 1e-13);
}

TEST_CASE("hermitian eigenvalues: hand examples") {
  auto ev = hermitian_eigenvalues(rdiag({4, 0}));
  CHECK(ev[0] == doctest::Approx(4).epsilon(1e-13));
  CHECK(ev[1] == doctest::Approx(0).epsilon(1e-13));

  ev = hermitian_eigenvalues(ComplexMatrix(2, 2, {2, 1, 1, 2}));
  CHECK(ev[0] == doctest::Approx(3).epsilon(1e-13));
  CHECK(ev[1] == doctest::Approx(1).epsilon(1e-13));

  ev = hermitian_eigenvalues(ComplexMatrix(2, 2, {2, 2, 2, 2}));
  CHECK(ev[0] == doctest::Approx(4).epsilon(1e-13));
  CHECK(std::abs(ev[1]) < 1e-12);
}

TEST_CASE("hermitian eigenvalues: domain errors") {
  CHECK_THROWS_AS(hermitian_eigenvalues(ComplexMatrix(2, 3)),
                  std::invalid_argument);
  ComplexMatrix asym(2, 2, {1, 5, 0, 1});
  CHECK_THROWS_AS(hermitian_eigenvalues(asym), std::domain_error);
}

TEST_CASE("eigenvalue sum matches trace") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.d = 6;
    ComplexMatrix h = random_psd(cfg);
    auto ev = hermitian_eigenvalues(h);
    double sum = 0;
    for (double l : ev) sum += l;
    CHECK(sum == doctest::Approx(trace(h).real()).epsilon(1e-12));
  }
}

TEST_CASE("singular values: hand examples") {
  auto sv = singular_values(rdiag({3, -4}));
  CHECK(sv[0] == doctest::Approx(4).epsilon(1e-13));
  CHECK(sv[1] == doctest::Approx(3).epsilon(1e-13));

  sv = singular_values(ComplexMatrix(2, 2, {0, 1, 0, 0}));
  CHECK(sv[0] == doctest::Approx(1).epsilon(1e-13));
  CHECK(sv[1] < 1e-10);

  sv = singular_values(ComplexMatrix(2, 2, {1, 1, 1, 1}));
  CHECK(sv[0] == doctest::Approx(2).epsilon(1e-13));
  CHECK(sv[1] < 1e-10);
}

TEST_CASE("singular values: rectangular shapes") {
  ComplexMatrix tall(3, 2, {1, 0, 0, 2, 0, 0});
  auto sv = singular_values(tall);
  REQUIRE(sv.size() == 2);
  CHECK(sv[0] == doctest::Approx(2).epsilon(1e-13));
  CHECK(sv[1] == doctest::Approx(1).epsilon(1e-13));

  auto svw = singular_values(adjoint(tall));
  REQUIRE(svw.size() == 2);
  CHECK(svw[0] == doctest::Approx(2).epsilon(1e-13));
}

TEST_CASE("unitary invariance of singular values") {
  GenConfig cfg;
  cfg.seed = 314;
  cfg.d = 6;
  ComplexMatrix a = random_matrix(cfg);
  Rng rng(2718);
  ComplexMatrix u = random_unitary(6, rng);
  ComplexMatrix w = random_unitary(6, rng);
  auto sva = singular_values(a);
  auto svu = singular_values(matmul(u, matmul(a, w)));
  for (std::size_t i = 0; i < sva.size(); ++i)
    CHECK(svu[i] == doctest::Approx(sva[i]).epsilon(1e-10));
}

TEST_CASE("spectral consistency: sum of squares equals trace inner") {
  for (std::uint64_t seed : {10u, 20u, 30u}) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.d = 5;
    ComplexMatrix a = random_matrix(cfg);
    auto sv = singular_values(a);
    double ssq = 0;
    for (double s : sv) ssq += s * s;
    CHECK(ssq == doctest::Approx(trace_inner(a, a).real()).epsilon(1e-10));
  }
}

TEST_CASE("gram eigenvalues stay above the clamp floor") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.d = 7;
    auto ev = hermitian_eigenvalues(gram(random_matrix(cfg)));
    double lmax = ev.front();
    for (double l : ev) CHECK(l >= -1e-12 * lmax);
  }
}

TEST_CASE("psd_sqrt round trip and errors") {
  CHECK(rel_diff(psd_sqrt(rdiag({4, 9})), rdiag({2, 3})) < 1e-14);
  CHECK(frobenius_norm(psd_sqrt(ComplexMatrix(3, 3))) == 0.0);

  double s3 = std::sqrt(3.0);
  ComplexMatrix want(2, 2, {(s3 + 1) / 2, (s3 - 1) / 2,
                            (s3 - 1) / 2, (s3 + 1) / 2});
  CHECK(rel_diff(psd_sqrt(ComplexMatrix(2, 2, {2, 1, 1, 2})), want) < 1e-13);

  CHECK_THROWS_AS(psd_sqrt(rdiag({1, -1})), std::domain_error);

  for (std::uint64_t seed : {4u, 5u, 6u}) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.d = 6;
    ComplexMatrix h = random_psd(cfg);
    ComplexMatrix s = psd_sqrt(h);
    CHECK(rel_diff(matmul(s, s), h) < 1e-9);
  }
}

TEST_CASE("trace_inner values") {
  ComplexMatrix i2 = ComplexMatrix::identity(2);
  CHECK(trace_inner(i2, i2) == cplx(2));
  CHECK(trace_inner(rdiag({1, 2}), rdiag({3, 4})) == cplx(11));
  CHECK_THROWS_AS(trace_inner(i2, ComplexMatrix(3, 3)),
                  std::invalid_argument);

  GenConfig ca, cb;
  ca.seed = 101;
  cb.seed = 102;
  ComplexMatrix a = random_matrix(ca), b = random_matrix(cb);
  cplx ab = trace_inner(a, b);
  cplx ba = trace_inner(b, a);
  CHECK(std::abs(ab - std::conj(ba)) < 1e-12);
  CHECK(trace_inner(a, a).real() >= 0.0);
}

TEST_CASE("matrix text format round trip") {
  GenConfig cfg;
  cfg.seed = 55;
  cfg.d = 3;
  ComplexMatrix m = random_matrix(cfg);
  std::stringstream ss;
  write_matrix(ss, m);
  ComplexMatrix back = parse_matrix(ss);
  CHECK(frobenius_norm(back - m) == 0.0);
}

TEST_CASE("matrix parser rejects bad input") {
  auto parse = [](const std::string& s) {
    std::stringstream ss(s);
    return parse_matrix(ss);
  };
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("2 2\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse("1 1\nnan 0\n"), ParseError);
  CHECK_THROWS_AS(parse("1 1\ninf 0\n"), ParseError);
  CHECK_THROWS_AS(parse("0 2\n"), ParseError);
  CHECK_THROWS_AS(parse("1 1\n1 0 extra\n"), ParseError);

  try {
    parse("1 2\n1 0\nbogus 0\n");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
}
