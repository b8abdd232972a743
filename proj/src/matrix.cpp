#include "hptau/matrix.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "hptau/error.hpp"

namespace hptau {

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "matrix product dimensions differ");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

std::vector<Scalar> operator*(const Matrix& a, const std::vector<Scalar>& v) {
  if (a.cols() != v.size()) throw Error(ErrorKind::ShapeMismatch, "matrix-vector dimensions differ");
  std::vector<Scalar> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) out[i] += a(i, k) * v[k];
  return out;
}

Matrix hconcat(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) return {};
  const std::size_t rows = blocks.front().rows();
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw Error(ErrorKind::ShapeMismatch, "hconcat blocks differ in height");
    cols += b.cols();
  }
  Matrix out(rows, cols);
  std::size_t c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c0 + c) = b(r, c);
    c0 += b.cols();
  }
  return out;
}

Matrix vconcat(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) return {};
  const std::size_t cols = blocks.front().cols();
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw Error(ErrorKind::ShapeMismatch, "vconcat blocks differ in width");
    rows += b.rows();
  }
  Matrix out(rows, cols);
  std::size_t r0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < cols; ++c) out(r0 + r, c) = b(r, c);
    r0 += b.rows();
  }
  return out;
}

Scalar det_exact(const Matrix& m) {
  if (!m.square()) {
    throw Error(ErrorKind::NotSquare,
                "determinant of a " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
  }
  const std::size_t n = m.rows();
  if (n == 0) return Scalar(1);
  Matrix a = m;
  Scalar prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(a(k, k))) {
      std::size_t p = k + 1;
      while (p < n && is_zero(a(p, k))) ++p;
      if (p == n) return Scalar(0);
      for (std::size_t c = k; c < n; ++c) std::swap(a(k, c), a(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  Scalar d = a(n - 1, n - 1);
  if (sign < 0) d = -d;
  return d;
}

std::vector<Scalar> solve_exact(const Matrix& m, const std::vector<Scalar>& rhs) {
  if (!m.square()) throw Error(ErrorKind::NotSquare, "solve_exact needs a square matrix");
  if (rhs.size() != m.rows()) throw Error(ErrorKind::ShapeMismatch, "right-hand side length differs from matrix size");
  const std::size_t n = m.rows();
  Matrix a = m;
  std::vector<Scalar> b = rhs;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && is_zero(a(p, k))) ++p;
    if (p == n) throw Error(ErrorKind::SingularMatrix, "matrix is singular (no pivot in column " + std::to_string(k) + ")");
    if (p != k) {
      for (std::size_t c = k; c < n; ++c) std::swap(a(k, c), a(p, c));
      std::swap(b[k], b[p]);
    }
    const Scalar inv = 1 / a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (is_zero(a(i, k))) continue;
      const Scalar factor = a(i, k) * inv;
      for (std::size_t c = k; c < n; ++c) a(i, c) -= factor * a(k, c);
      b[i] -= factor * b[k];
    }
  }
  std::vector<Scalar> x(n);
  for (std::size_t k = n; k-- > 0;) {
    Scalar acc = b[k];
    for (std::size_t c = k + 1; c < n; ++c) acc -= a(k, c) * x[c];
    x[k] = acc / a(k, k);
  }
  return x;
}

Matrix toeplitz_block(const SeriesFamily& fam, const ToeplitzBlockSpec& spec) {
  if (spec.series_index >= fam.size()) throw std::out_of_range("series index outside the family");
  Matrix out(spec.height, spec.width);
  for (std::size_t a = 1; a <= spec.height; ++a)
    for (std::size_t b = 1; b <= spec.width; ++b) {
      const long long idx = spec.offset + static_cast<long long>(a) - static_cast<long long>(b);
      out(a - 1, b - 1) = fam.b(spec.series_index, idx);
    }
  return out;
}

}  // namespace hptau
