#pragma once

#include <cstddef>
#include <vector>

#include "hptau/polynomial.hpp"
#include "hptau/series.hpp"

namespace hptau {

/// Square matrix of polynomials in a single named variable ('w' or 'x').
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t size, char var) : size_(size), var_(var), entries_(size * size) {}

  static PolyMatrix identity(std::size_t size, char var);

  std::size_t size() const { return size_; }
  char variable() const { return var_; }

  Polynomial& operator()(std::size_t r, std::size_t c) { return entries_[r * size_ + c]; }
  const Polynomial& operator()(std::size_t r, std::size_t c) const { return entries_[r * size_ + c]; }

  PolyMatrix transposed() const;
  /// Largest entry degree (kZeroDegree for the zero matrix).
  int max_degree() const;

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t size_ = 0;
  char var_ = 'w';
  std::vector<Polynomial> entries_;
};

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix operator*(const Scalar& c, const PolyMatrix& a);

/// Fraction-free elimination over Q[var] with exact polynomial division.
Polynomial determinant(const PolyMatrix& m);
/// Classical adjoint: adjugate(m) * m = det(m) * I.
PolyMatrix adjugate(const PolyMatrix& m);

}  // namespace hptau
