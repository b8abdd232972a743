#include <gtest/gtest.h>

#include "hptau/error.hpp"
#include "hptau/matrix.hpp"
#include "hptau/matrix_series.hpp"
#include "hptau/poly_matrix.hpp"
#include "hptau/random.hpp"
#include "oracles.hpp"

using namespace hptau;

namespace {

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.rational();
  return m;
}

}  // namespace

TEST(Det, Examples) {
  EXPECT_EQ(det_exact(Matrix{{2, 1}, {3, 2}}), 1);
  EXPECT_EQ(det_exact(Matrix{{1, 2, 3}, {4, 5, 6}, {1, 2, 3}}), 0);
  EXPECT_EQ(det_exact(Matrix(0, 0)), 1);
  EXPECT_EQ(det_exact(Matrix{{0, 1}, {1, 0}}), -1);
  try {
    det_exact(Matrix(2, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSquare);
  }
}

TEST(Det, MatchesCofactorOracle) {
  Rng rng(21);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 8; ++trial) {
      Matrix m = random_matrix(rng, n, n);
      if (trial % 3 == 0 && n > 1) {
        for (std::size_t c = 0; c < n; ++c) m(0, c) = 0;
        m(0, n - 1) = rng.nonzero_rational();
      }
      EXPECT_EQ(det_exact(m), oracle::cofactor_det(m)) << "n=" << n;
    }
  }
}

TEST(Det, RepeatedRowVanishes) {
  Rng rng(22);
  Matrix m = random_matrix(rng, 5, 5);
  for (std::size_t c = 0; c < 5; ++c) m(3, c) = m(1, c);
  EXPECT_EQ(det_exact(m), 0);
}

TEST(Solve, Examples) {
  EXPECT_EQ(solve_exact(Matrix::identity(3), {1, 2, 3}), (std::vector<Scalar>{1, 2, 3}));
  EXPECT_EQ(solve_exact(Matrix{{2, 1}, {3, 2}}, {1, 0}), (std::vector<Scalar>{2, -3}));
  try {
    solve_exact(Matrix{{1, 1}, {1, 1}}, {1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SingularMatrix);
  }
}

TEST(Solve, MatchesCramerAndReproducesRhs) {
  Rng rng(23);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 6; ++trial) {
      const Matrix m = random_matrix(rng, n, n);
      if (oracle::cofactor_det(m) == 0) continue;
      std::vector<Scalar> rhs(n);
      for (auto& v : rhs) v = rng.rational();
      const auto x = solve_exact(m, rhs);
      EXPECT_EQ(x, oracle::cramer(m, rhs));
      EXPECT_EQ(m * x, rhs);
    }
  }
}

TEST(Concat, ShapesMustAgree) {
  EXPECT_EQ(hconcat({Matrix{{1}, {2}}, Matrix{{3, 4}, {5, 6}}}), (Matrix{{1, 3, 4}, {2, 5, 6}}));
  EXPECT_EQ(vconcat({Matrix{{1, 2}}, Matrix{{3, 4}}}), (Matrix{{1, 2}, {3, 4}}));
  EXPECT_THROW(hconcat({Matrix(1, 1), Matrix(2, 1)}), Error);
  EXPECT_THROW(vconcat({Matrix(1, 1), Matrix(1, 2)}), Error);
}

TEST(Toeplitz, Examples) {
  const auto fam = oracle::counting_family(8);
  EXPECT_EQ(toeplitz_block(fam, {1, 1, 1, 1}), (Matrix{{1}}));
  EXPECT_EQ(toeplitz_block(fam, {1, 2, 2, 2}), (Matrix{{2, 1}, {3, 2}}));
  EXPECT_EQ(toeplitz_block(fam, {1, -1, 2, 1}), (Matrix{{0}, {0}}));
  EXPECT_EQ(toeplitz_block(fam, {0, 0, 2, 2}), Matrix::identity(2));
  try {
    toeplitz_block(fam, {1, 7, 2, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InsufficientOrder);
  }
}

TEST(Toeplitz, ShiftProperty) {
  Rng rng(24);
  const auto fam = random_family(rng, 3, 12);
  for (long long m = -2; m <= 4; ++m) {
    const Matrix a = toeplitz_block(fam, {2, m, 4, 3});
    const Matrix b = toeplitz_block(fam, {2, m + 1, 4, 3});
    for (std::size_t r = 0; r + 1 < 4; ++r)
      for (std::size_t c = 0; c < 3; ++c) EXPECT_EQ(a(r + 1, c), b(r, c));
  }
}

TEST(PolyMatrix, DeterminantMatchesPointEvaluation) {
  Rng rng(25);
  for (std::size_t n = 1; n <= 4; ++n) {
    PolyMatrix m(n, 'w');
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = Polynomial({rng.rational(), rng.rational(), rng.rational()});
    const Polynomial d = determinant(m);
    for (long x = -2; x <= 2; ++x) {
      oracle::Grid g(n, std::vector<Scalar>(n));
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) g[r][c] = m(r, c).evaluate(Scalar(x));
      EXPECT_EQ(d.evaluate(Scalar(x)), oracle::cofactor_det(g));
    }
  }
}

TEST(PolyMatrix, AdjugateTimesMatrixIsDeterminant) {
  Rng rng(26);
  for (std::size_t n = 1; n <= 4; ++n) {
    PolyMatrix m(n, 'w');
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = Polynomial({rng.rational(), rng.rational()});
    const Polynomial d = determinant(m);
    PolyMatrix expected(n, 'w');
    for (std::size_t i = 0; i < n; ++i) expected(i, i) = d;
    EXPECT_EQ(adjugate(m) * m, expected);
    EXPECT_EQ(m * adjugate(m), expected);
  }
}

TEST(MatrixSeries, ProductAndDeterminant) {
  Rng rng(27);
  const MatrixSeries a = random_unit_matrix_series(rng, 3, 6);
  const MatrixSeries b = random_unit_matrix_series(rng, 3, 6);
  EXPECT_TRUE(a.has_identity_constant());
  const MatrixSeries ab = a * b;
  for (std::size_t k = 0; k < 6; ++k) {
    Matrix expected(3, 3);
    for (std::size_t m = 0; m <= k; ++m) {
      const Matrix term = a.coefficient(m) * b.coefficient(k - m);
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) expected(r, c) += term(r, c);
    }
    EXPECT_EQ(ab.coefficient(k), expected);
  }
  EXPECT_EQ(determinant(ab), series_mul(determinant(a), determinant(b)));
  EXPECT_EQ(determinant(MatrixSeries::identity(3, 5)), TruncatedSeries::one(5));
}
