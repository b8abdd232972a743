#include "hptau/matrix_series.hpp"

#include <algorithm>
#include <stdexcept>

#include "hptau/error.hpp"

namespace hptau {

MatrixSeries::MatrixSeries(std::size_t size, std::size_t order)
    : size_(size), order_(order), entries_(size * size, TruncatedSeries::zero(order)) {}

MatrixSeries::MatrixSeries(std::size_t size, std::vector<TruncatedSeries> entries)
    : size_(size), entries_(std::move(entries)) {
  if (entries_.size() != size * size) throw std::invalid_argument("matrix series needs size^2 entries");
  order_ = entries_.empty() ? 0 : entries_.front().order();
  for (const auto& e : entries_) order_ = std::min(order_, e.order());
  for (auto& e : entries_) e = e.truncated(order_);
}

MatrixSeries MatrixSeries::identity(std::size_t size, std::size_t order) {
  MatrixSeries m(size, order);
  for (std::size_t k = 0; k < size; ++k) m.set(k, k, TruncatedSeries::one(order));
  return m;
}

MatrixSeries MatrixSeries::from_coefficients(const std::vector<Matrix>& coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("no coefficients");
  const std::size_t size = coeffs.front().rows();
  std::vector<TruncatedSeries> entries;
  entries.reserve(size * size);
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = 0; c < size; ++c) {
      std::vector<Scalar> s(coeffs.size());
      for (std::size_t k = 0; k < coeffs.size(); ++k) s[k] = coeffs[k](r, c);
      entries.emplace_back(std::move(s), coeffs.size());
    }
  return MatrixSeries(size, std::move(entries));
}

void MatrixSeries::set(std::size_t r, std::size_t c, TruncatedSeries s) {
  if (s.order() < order_) throw Error(ErrorKind::InsufficientOrder, "entry order below the matrix order");
  entries_[r * size_ + c] = s.truncated(order_);
}

Matrix MatrixSeries::coefficient(std::size_t k) const {
  Matrix m(size_, size_);
  for (std::size_t r = 0; r < size_; ++r)
    for (std::size_t c = 0; c < size_; ++c) m(r, c) = (*this)(r, c).at(static_cast<long long>(k));
  return m;
}

std::vector<TruncatedSeries> MatrixSeries::column(std::size_t c) const {
  std::vector<TruncatedSeries> col;
  col.reserve(size_);
  for (std::size_t r = 0; r < size_; ++r) col.push_back((*this)(r, c));
  return col;
}

bool MatrixSeries::has_identity_constant() const {
  return order_ > 0 && coefficient(0) == Matrix::identity(size_);
}

MatrixSeries MatrixSeries::truncated(std::size_t order) const {
  std::vector<TruncatedSeries> cut;
  cut.reserve(entries_.size());
  for (const auto& e : entries_) cut.push_back(e.truncated(order));
  return MatrixSeries(size_, std::move(cut));
}

MatrixSeries operator*(const MatrixSeries& a, const MatrixSeries& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::ShapeMismatch, "matrix series differ in size");
  const std::size_t n = a.size();
  const std::size_t order = std::min(a.order(), b.order());
  MatrixSeries out(n, order);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      TruncatedSeries acc = TruncatedSeries::zero(order);
      for (std::size_t k = 0; k < n; ++k) acc = acc + series_mul(a(i, k), b(k, j));
      out.set(i, j, std::move(acc));
    }
  return out;
}

MatrixSeries operator*(const PolyMatrix& p, const MatrixSeries& a) {
  if (p.size() != a.size()) throw Error(ErrorKind::ShapeMismatch, "matrix sizes differ");
  const std::size_t n = a.size();
  MatrixSeries out(n, a.order());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      TruncatedSeries acc = TruncatedSeries::zero(a.order());
      for (std::size_t k = 0; k < n; ++k) acc = acc + series_mul(p(i, k), a(k, j));
      out.set(i, j, std::move(acc));
    }
  return out;
}

namespace {

TruncatedSeries cofactor_det(const MatrixSeries& m, std::vector<std::size_t>& rows, std::size_t col) {
  const std::size_t n = m.size();
  if (col == n) return TruncatedSeries::one(m.order());
  TruncatedSeries acc = TruncatedSeries::zero(m.order());
  int sign = 1;
  for (std::size_t idx = 0; idx < rows.size(); ++idx) {
    const std::size_t r = rows[idx];
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(idx));
    const TruncatedSeries term = series_mul(m(r, col), cofactor_det(m, rows, col + 1));
    rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(idx), r);
    acc = sign > 0 ? acc + term : acc - term;
    sign = -sign;
  }
  return acc;
}

}  // namespace

TruncatedSeries determinant(const MatrixSeries& m) {
  std::vector<std::size_t> rows(m.size());
  for (std::size_t k = 0; k < rows.size(); ++k) rows[k] = k;
  return cofactor_det(m, rows, 0);
}

}  // namespace hptau
