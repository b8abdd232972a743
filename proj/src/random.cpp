#include "hptau/random.hpp"

#include <vector>

namespace hptau {

long long Rng::integer(long long lo, long long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long long>(engine_() % span);
}

Scalar Rng::rational() {
  const long long p = integer(-9, 9);
  const long long q = integer(1, 4);
  Scalar out(static_cast<long>(p), static_cast<long>(q));
  out.canonicalize();
  return out;
}

Scalar Rng::nonzero_rational() {
  Scalar out;
  do {
    out = rational();
  } while (is_zero(out));
  return out;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SeriesFamily random_family(Rng& rng, std::size_t L, std::size_t order) {
  std::vector<TruncatedSeries> series;
  series.push_back(TruncatedSeries::one(order));
  for (std::size_t i = 1; i < L; ++i) {
    std::vector<Scalar> c(order);
    for (std::size_t k = 1; k < order; ++k) c[k] = rng.rational();
    series.emplace_back(std::move(c), order);
  }
  return SeriesFamily(std::move(series));
}

MatrixSeries random_unit_matrix_series(Rng& rng, std::size_t L, std::size_t order) {
  std::vector<Matrix> coeffs(order, Matrix(L, L));
  if (order > 0) coeffs[0] = Matrix::identity(L);
  for (std::size_t k = 1; k < order; ++k)
    for (std::size_t r = 0; r < L; ++r)
      for (std::size_t c = 0; c < L; ++c) coeffs[k](r, c) = rng.rational();
  return MatrixSeries::from_coefficients(coeffs);
}

SkewTable random_skew_table(Rng& rng, const Word& alphabet) {
  SkewTable table;
  for (std::size_t a = 0; a < alphabet.size(); ++a)
    for (std::size_t b = a + 1; b < alphabet.size(); ++b) table.set(alphabet[a], alphabet[b], rng.rational());
  return table;
}

PairTable random_pair_table(Rng& rng, const Word& rows, const Word& cols) {
  PairTable table;
  for (Letter r : rows)
    for (Letter c : cols) table.set(r, c, rng.rational());
  return table;
}

}  // namespace hptau
