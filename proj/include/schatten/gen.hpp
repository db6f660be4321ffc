#pragma once

#include <cstdint>
#include <utility>

#include "schatten/tuple.hpp"

namespace schatten {

/// Counter-free splitmix64 stream. Constants are the standard splitmix64
/// ones; the stream is a pure function of the seed, so traces are
/// reproducible bit-for-bit across runs and thread counts.
struct Rng {
  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next();
  double uniform();   // [0, 1)
  double gaussian();  // standard normal, Box-Muller

  std::uint64_t state;
  bool cached = false;
  double cache = 0.0;
};

/// Sub-seed for element k of a stream rooted at seed:
/// splitmix64_mix(seed + (k+1) * 0xD1B54A32D192ED03).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t k);

enum class EntryDist { ComplexGaussian, ComplexUniform };

struct GenConfig {
  std::uint64_t seed = 0;
  std::size_t n = 3;
  std::size_t d = 4;
  EntryDist dist = EntryDist::ComplexGaussian;
  double scale = 1.0;
};

ComplexMatrix random_matrix(const GenConfig& cfg);
ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng,
                            EntryDist dist, double scale);

/// gram of a random matrix: Hermitian PSD by construction.
ComplexMatrix random_psd(const GenConfig& cfg);

/// Orthonormalization of a random Gaussian matrix, with the phase of each
/// column pinned for determinism.
ComplexMatrix random_unitary(std::size_t d, Rng& rng);

/// A_1..A_{n-1} random, A_n = -(A_1 + ... + A_{n-1}). n >= 2.
OperatorTuple sum_zero_tuple(const GenConfig& cfg);

/// (A, B) with (sum A_i)* (sum B_j) = 0: sum B is forced into the
/// orthogonal complement of ran(sum A).
std::pair<OperatorTuple, OperatorTuple> cross_orthogonal_pair(
    const GenConfig& cfg);

/// A_i = U_i G_i* with disjoint column blocks U_i of a random unitary,
/// each of rank floor(d/n). Requires d >= n.
OperatorTuple orthogonal_ranges_tuple(const GenConfig& cfg);

/// n independent random PSD draws.
OperatorTuple positive_tuple(const GenConfig& cfg);

/// n i.i.d. nonnegative scalars (|gaussian| * scale).
std::vector<double> nonnegative_scalars(const GenConfig& cfg);

}  // namespace schatten
