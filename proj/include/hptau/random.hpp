#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "hptau/matrix_series.hpp"
#include "hptau/pfaffian.hpp"
#include "hptau/scalar.hpp"
#include "hptau/series.hpp"

namespace hptau {

/// Deterministic generator; draws avoid the implementation-defined standard
/// distributions so results match across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-ish integer in [lo, hi].
  long long integer(long long lo, long long hi);
  /// p/q with p in [-9, 9], q in [1, 4].
  Scalar rational();
  Scalar nonzero_rational();

 private:
  std::mt19937_64 engine_;
};

/// Independent seed for trial `trial` of a run seeded with `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

/// f_0 = 1 and random f_i with f_i(0) = 0.
SeriesFamily random_family(Rng& rng, std::size_t L, std::size_t order);
/// Random matrix series with Phi(0) = I.
MatrixSeries random_unit_matrix_series(Rng& rng, std::size_t L, std::size_t order);
SkewTable random_skew_table(Rng& rng, const Word& alphabet);
PairTable random_pair_table(Rng& rng, const Word& rows, const Word& cols);

}  // namespace hptau
