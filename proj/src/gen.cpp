#include "schatten/gen.hpp"

#include <cmath>
#include <numbers>

#include "schatten/eig.hpp"

namespace schatten {

namespace {

std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t Rng::next() {
  state += 0x9E3779B97F4A7C15ULL;
  return splitmix64_mix(state);
}

double Rng::uniform() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
  if (cached) {
    cached = false;
    return cache;
  }
  double u1 = uniform();
  while (u1 == 0.0) u1 = uniform();
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double a = 2.0 * std::numbers::pi * u2;
  cache = r * std::sin(a);
  cached = true;
  return r * std::cos(a);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t k) {
  return splitmix64_mix(seed + (k + 1) * 0xD1B54A32D192ED03ULL);
}

namespace {

cplx random_entry(Rng& rng, EntryDist dist, double scale) {
  if (dist == EntryDist::ComplexGaussian)
    return scale * cplx(rng.gaussian(), rng.gaussian());
  return scale * cplx(2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0);
}

}  // namespace

ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng,
                            EntryDist dist, double scale) {
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = random_entry(rng, dist, scale);
  return m;
}

ComplexMatrix random_matrix(const GenConfig& cfg) {
  Rng rng(cfg.seed);
  return random_matrix(cfg.d, cfg.d, rng, cfg.dist, cfg.scale);
}

ComplexMatrix random_psd(const GenConfig& cfg) {
  return gram(random_matrix(cfg));
}

ComplexMatrix random_unitary(std::size_t d, Rng& rng) {
  for (int attempt = 0; attempt < 16; ++attempt) {
    ComplexMatrix g =
        random_matrix(d, d, rng, EntryDist::ComplexGaussian, 1.0);
    ColumnBasis basis = orthonormal_columns(g, 1e-8);
    if (basis.rank == d) return basis.q;
  }
  throw std::runtime_error("random_unitary: rank-deficient draws");
}

OperatorTuple sum_zero_tuple(const GenConfig& cfg) {
  if (cfg.n < 2) throw std::invalid_argument("sum_zero_tuple requires n >= 2");
  OperatorTuple t;
  t.constraint = Constraint::SumZero;
  ComplexMatrix acc(cfg.d, cfg.d);
  for (std::size_t k = 0; k + 1 < cfg.n; ++k) {
    Rng rng(mix_seed(cfg.seed, k));
    ComplexMatrix m = random_matrix(cfg.d, cfg.d, rng, cfg.dist, cfg.scale);
    acc = acc + m;
    t.matrices.push_back(std::move(m));
  }
  t.matrices.push_back(-acc);
  return t;
}

std::pair<OperatorTuple, OperatorTuple> cross_orthogonal_pair(
    const GenConfig& cfg) {
  if (cfg.d < 2)
    throw std::invalid_argument("cross_orthogonal_pair requires d >= 2");
  OperatorTuple a;
  a.constraint = Constraint::Free;
  for (std::size_t k = 0; k < cfg.n; ++k) {
    Rng rng(mix_seed(cfg.seed, k));
    a.matrices.push_back(
        random_matrix(cfg.d, cfg.d, rng, cfg.dist, cfg.scale));
  }

  // P projects onto ran(sum A); sum B is forced into its complement.
  ComplexMatrix sa = a.sum();
  ColumnBasis basis = orthonormal_columns(sa, 1e-12 * frobenius_norm(sa));
  OperatorTuple b;
  b.constraint = Constraint::Free;
  ComplexMatrix acc(cfg.d, cfg.d);
  for (std::size_t k = 0; k + 1 < cfg.n; ++k) {
    Rng rng(mix_seed(cfg.seed, cfg.n + k));
    ComplexMatrix m = random_matrix(cfg.d, cfg.d, rng, cfg.dist, cfg.scale);
    acc = acc + m;
    b.matrices.push_back(std::move(m));
  }
  Rng rng(mix_seed(cfg.seed, 2 * cfg.n));
  ComplexMatrix free = random_matrix(cfg.d, cfg.d, rng, cfg.dist, cfg.scale);
  ComplexMatrix target = free;  // (I - P) free
  if (basis.rank > 0)
    target = free - matmul(basis.q, matmul(adjoint(basis.q), free));
  b.matrices.push_back(target - acc);
  return {std::move(a), std::move(b)};
}

OperatorTuple orthogonal_ranges_tuple(const GenConfig& cfg) {
  if (cfg.d < cfg.n)
    throw std::invalid_argument(
        "orthogonal_ranges_tuple requires d >= n");
  Rng urng(mix_seed(cfg.seed, 0));
  ComplexMatrix u = random_unitary(cfg.d, urng);
  const std::size_t r = cfg.d / cfg.n;
  OperatorTuple t;
  t.constraint = Constraint::OrthogonalRanges;
  for (std::size_t k = 0; k < cfg.n; ++k) {
    ComplexMatrix block(cfg.d, r);
    for (std::size_t i = 0; i < cfg.d; ++i)
      for (std::size_t j = 0; j < r; ++j) block(i, j) = u(i, k * r + j);
    Rng rng(mix_seed(cfg.seed, k + 1));
    ComplexMatrix g = random_matrix(cfg.d, r, rng, cfg.dist, cfg.scale);
    t.matrices.push_back(matmul(block, adjoint(g)));
  }
  return t;
}

OperatorTuple positive_tuple(const GenConfig& cfg) {
  OperatorTuple t;
  t.constraint = Constraint::PositiveEach;
  for (std::size_t k = 0; k < cfg.n; ++k) {
    GenConfig sub = cfg;
    sub.seed = mix_seed(cfg.seed, k);
    t.matrices.push_back(random_psd(sub));
  }
  return t;
}

std::vector<double> nonnegative_scalars(const GenConfig& cfg) {
  Rng rng(cfg.seed);
  std::vector<double> out(cfg.n);
  for (double& v : out) v = std::abs(rng.gaussian()) * cfg.scale;
  return out;
}

}  // namespace schatten
