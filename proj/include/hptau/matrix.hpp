#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "hptau/scalar.hpp"
#include "hptau/series.hpp"

namespace hptau {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  Matrix transposed() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
std::vector<Scalar> operator*(const Matrix& a, const std::vector<Scalar>& v);

/// Horizontal concatenation; all blocks must share the row count.
Matrix hconcat(const std::vector<Matrix>& blocks);
/// Vertical concatenation; all blocks must share the column count.
Matrix vconcat(const std::vector<Matrix>& blocks);

/// Bareiss fraction-free elimination with row pivoting. Throws Error(NotSquare).
/// The empty matrix has determinant 1.
Scalar det_exact(const Matrix& m);

/// Solves m x = rhs. Throws Error(NotSquare), Error(ShapeMismatch) or
/// Error(SingularMatrix).
std::vector<Scalar> solve_exact(const Matrix& m, const std::vector<Scalar>& rhs);

/// Selects B^i_m(k, l) of a family.
struct ToeplitzBlockSpec {
  std::size_t series_index = 0;
  long long offset = 0;
  std::size_t height = 0;
  std::size_t width = 0;
};

/// k x l matrix with entry (a, b) = b^i_{m + a - b} for 1-based a, b.
/// Negative indices read as zero; indices beyond the family order throw
/// Error(InsufficientOrder).
Matrix toeplitz_block(const SeriesFamily& fam, const ToeplitzBlockSpec& spec);

}  // namespace hptau
