#pragma once

#include <cstddef>
#include <vector>

#include "hptau/matrix.hpp"
#include "hptau/poly_matrix.hpp"
#include "hptau/series.hpp"

namespace hptau {

/// Square matrix of truncated series sharing one order; entry (i, j) is
/// phi_{i,j}(w) = sum_k a^{i,j}_k w^k.
class MatrixSeries {
 public:
  MatrixSeries() = default;
  MatrixSeries(std::size_t size, std::size_t order);
  /// Row-major entries; the common order is the minimum entry order.
  MatrixSeries(std::size_t size, std::vector<TruncatedSeries> entries);

  static MatrixSeries identity(std::size_t size, std::size_t order);
  /// sum_k coeffs[k] w^k, trusted for k < coeffs.size().
  static MatrixSeries from_coefficients(const std::vector<Matrix>& coeffs);

  std::size_t size() const { return size_; }
  std::size_t order() const { return order_; }
  const TruncatedSeries& operator()(std::size_t r, std::size_t c) const { return entries_[r * size_ + c]; }
  void set(std::size_t r, std::size_t c, TruncatedSeries s);

  /// Coefficient matrix of w^k.
  Matrix coefficient(std::size_t k) const;
  std::vector<TruncatedSeries> column(std::size_t c) const;
  bool has_identity_constant() const;
  MatrixSeries truncated(std::size_t order) const;

  friend bool operator==(const MatrixSeries&, const MatrixSeries&) = default;

 private:
  std::size_t size_ = 0;
  std::size_t order_ = 0;
  std::vector<TruncatedSeries> entries_;
};

MatrixSeries operator*(const MatrixSeries& a, const MatrixSeries& b);
/// Polynomial matrix (in w) times a matrix series.
MatrixSeries operator*(const PolyMatrix& p, const MatrixSeries& a);
/// Determinant by cofactor expansion in the series ring.
TruncatedSeries determinant(const MatrixSeries& m);

}  // namespace hptau
