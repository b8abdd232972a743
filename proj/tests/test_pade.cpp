#include <gtest/gtest.h>

#include <numeric>

#include "hptau/error.hpp"
#include "hptau/pade.hpp"
#include "hptau/random.hpp"
#include "hptau/tau.hpp"
#include "oracles.hpp"

using namespace hptau;

namespace {

Polynomial poly(std::vector<Scalar> c) { return Polynomial(std::move(c)); }

PolyMatrix poly_matrix(char var, std::initializer_list<std::initializer_list<Polynomial>> rows) {
  PolyMatrix m(rows.size(), var);
  std::size_t r = 0;
  for (const auto& row : rows) {
    std::size_t c = 0;
    for (const auto& p : row) m(r, c++) = p;
    ++r;
  }
  return m;
}

SeriesFamily nondegenerate_family(std::uint64_t seed, std::size_t L, std::size_t n, std::size_t order) {
  Rng rng(seed);
  for (;;) {
    SeriesFamily fam = random_family(rng, L, order);
    try {
      hermite_pade(fam, n);
      return fam;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DegenerateFamily) throw;
    }
  }
}

}  // namespace

TEST(HermitePade, RationalFamilyIsFlaggedDegenerate) {
  const auto fam = oracle::family_from({{0, 1}}, 8);
  const auto hp = hermite_pade(fam, 1);
  EXPECT_EQ(hp.q[0][0], poly({}));
  EXPECT_EQ(hp.q[0][1], poly({1}));
  EXPECT_EQ(hp.q[1][0], poly({-1}));
  EXPECT_EQ(hp.q[1][1], poly({1}));
  EXPECT_TRUE(hp.remainders[1].is_zero());
  EXPECT_TRUE(hp.degenerate());

  const PolyMatrix p = simultaneous_pade(hp);
  EXPECT_EQ(p, poly_matrix('w', {{poly({1}), poly({0, 1})}, {poly({0, -1}), poly({})}}));
  EXPECT_EQ(approximant_matrix(hp), poly_matrix('w', {{poly({}), poly({0, 1})}, {poly({0, -1}), poly({1})}}));
  EXPECT_EQ(schlesinger_matrix(hp), poly_matrix('x', {{poly({}), poly({1})}, {poly({-1}), poly({0, 1})}}));
  EXPECT_TRUE(mahler_check(approximant_matrix(hp), p, 1));
}

TEST(HermitePade, CountingFamily) {
  const auto fam = oracle::counting_family(10);
  const auto hp = hermite_pade(fam, 1);
  EXPECT_EQ(hp.q[0][0], poly({}));
  EXPECT_EQ(hp.q[0][1], poly({1}));
  EXPECT_EQ(hp.q[1][0], poly({-1}));
  EXPECT_EQ(hp.q[1][1], poly({1, -2}));
  EXPECT_FALSE(hp.degenerate());
  // rho^1 = -w^3 / (1 - w)^2
  for (long long k = 0; k < 10; ++k) EXPECT_EQ(hp.remainders[1].at(k), Scalar(k < 3 ? 0L : static_cast<long>(2 - k))) << k;
  EXPECT_EQ(hp.remainders[1].at(3), rho_via_det(fam, 1, 1, 1));

  const PolyMatrix p = simultaneous_pade(hp);
  EXPECT_EQ(p, poly_matrix('w', {{poly({1, -2}), poly({0, 1})}, {poly({0, -1}), poly({})}}));
  EXPECT_EQ(schlesinger_matrix(hp), poly_matrix('x', {{poly({}), poly({1})}, {poly({-1}), poly({-2, 1})}}));
  EXPECT_EQ(determinant(schlesinger_matrix(hp)), poly({1}));
}

TEST(HermitePade, VanishingFirstCoefficientIsDegenerate) {
  const auto fam = oracle::family_from({{0, 0, 1}}, 8);
  try {
    hermite_pade(fam, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateFamily);
    EXPECT_NE(std::string(e.what()).find("|B"), std::string::npos);
  }
}

TEST(HermitePade, NeedsEnoughOrder) {
  const auto fam = oracle::counting_family(5);
  EXPECT_NO_THROW(hermite_pade(fam.truncated(4), 1));
  try {
    hermite_pade(fam.truncated(5), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InsufficientOrder);
  }
}

TEST(HermitePade, SolutionMatchesCramerOracle) {
  for (std::size_t L = 2; L <= 3; ++L)
    for (std::size_t n = 1; n <= 2; ++n) {
      const auto fam = nondegenerate_family(40 + L * 10 + n, L, n, L * n + 3);
      const auto hp = hermite_pade(fam, n);
      for (std::size_t i = 0; i < L; ++i) {
        const auto sys = hermite_pade_system(fam, n, i);
        const auto x = oracle::cramer(sys.matrix, sys.rhs);
        for (std::size_t c = 0; c < x.size(); ++c) {
          const auto [j, l] = sys.unknowns[c];
          EXPECT_EQ(hp.q[i][j].coefficient(static_cast<int>(l)), x[c]) << "L=" << L << " n=" << n << " i=" << i;
        }
      }
    }
}

TEST(HermitePade, PermutedEliminationGivesSameSolution) {
  Rng shuffle_rng(77);
  for (std::size_t L = 2; L <= 4; ++L)
    for (std::size_t n = 1; n <= 2; ++n) {
      const auto fam = nondegenerate_family(60 + L * 10 + n, L, n, L * n + 3);
      const auto hp = hermite_pade(fam, n);
      for (std::size_t i = 0; i < L; ++i) {
        const auto sys = hermite_pade_system(fam, n, i);
        const std::size_t size = sys.rhs.size();
        std::vector<std::size_t> rows(size), cols(size);
        std::iota(rows.begin(), rows.end(), 0);
        std::iota(cols.begin(), cols.end(), 0);
        for (std::size_t k = size; k > 1; --k) {
          std::swap(rows[k - 1], rows[static_cast<std::size_t>(shuffle_rng.integer(0, static_cast<long long>(k) - 1))]);
          std::swap(cols[k - 1], cols[static_cast<std::size_t>(shuffle_rng.integer(0, static_cast<long long>(k) - 1))]);
        }
        Matrix m(size, size);
        std::vector<Scalar> rhs(size);
        for (std::size_t r = 0; r < size; ++r) {
          rhs[r] = sys.rhs[rows[r]];
          for (std::size_t c = 0; c < size; ++c) m(r, c) = sys.matrix(rows[r], cols[c]);
        }
        const auto y = solve_exact(m, rhs);
        for (std::size_t c = 0; c < size; ++c) {
          const auto [j, l] = sys.unknowns[cols[c]];
          EXPECT_EQ(hp.q[i][j].coefficient(static_cast<int>(l)), y[c]);
        }
      }
    }
}

TEST(HermitePade, InvariantsOnRandomFamilies) {
  for (std::size_t L = 2; L <= 4; ++L)
    for (std::size_t n = 1; n <= 3; ++n)
      for (std::uint64_t trial = 0; trial < 5; ++trial) {
        const auto fam = nondegenerate_family(trial_seed(L * 100 + n, trial), L, n, L * n + 4);
        const auto hp = hermite_pade(fam, n);
        const std::size_t ln = L * n;
        for (std::size_t i = 0; i < L; ++i) {
          for (std::size_t j = 0; j < L; ++j) EXPECT_LE(hp.q[i][j].degree(), static_cast<int>(n) - 1 + (i == j));
          if (i != 0) EXPECT_EQ(hp.q[i][i].coefficient(0), 1);
          for (std::size_t k = 0; k <= ln; ++k)
            EXPECT_EQ(hp.remainders[i].at(static_cast<long long>(k)), (i == 0 && k == ln) ? 1 : 0);
        }
        const PolyMatrix q = approximant_matrix(hp);
        const PolyMatrix p = simultaneous_pade(hp);
        EXPECT_TRUE(mahler_check(q, p, n));
        EXPECT_LE(p.max_degree(), static_cast<int>((L - 1) * n));
        EXPECT_EQ(determinant(q), Polynomial::monomial(1, static_cast<int>(ln)));
        EXPECT_EQ(determinant(schlesinger_matrix(hp)), Polynomial::constant(1));
        EXPECT_EQ(hp.det_b, block_D(fam, n));
        EXPECT_EQ(hp.det_b, oracle::block_d(fam, n));

        const auto other = nondegenerate_family(trial_seed(L * 100 + n + 7, trial), L, n, L * n + 4);
        EXPECT_FALSE(mahler_check(q, simultaneous_pade(hermite_pade(other, n)), n));
      }
}

TEST(HermitePade, ConditionTableHasFamilyShape) {
  const auto fam = nondegenerate_family(5, 3, 1, 10);
  const auto hp = hermite_pade(fam, 1);
  const auto table = simultaneous_condition_table(fam, simultaneous_pade(hp), 1);
  ASSERT_EQ(table.size(), 3u);
  for (const auto& row : table) EXPECT_EQ(row.size(), 3u);
  EXPECT_EQ(table, simultaneous_condition_table(fam, simultaneous_pade(hp), 1));
}
