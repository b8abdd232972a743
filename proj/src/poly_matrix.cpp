#include "hptau/poly_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "hptau/error.hpp"

namespace hptau {

PolyMatrix PolyMatrix::identity(std::size_t size, char var) {
  PolyMatrix m(size, var);
  for (std::size_t k = 0; k < size; ++k) m(k, k) = Polynomial::constant(1);
  return m;
}

PolyMatrix PolyMatrix::transposed() const {
  PolyMatrix t(size_, var_);
  for (std::size_t r = 0; r < size_; ++r)
    for (std::size_t c = 0; c < size_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

int PolyMatrix::max_degree() const {
  int d = Polynomial::kZeroDegree;
  for (const auto& p : entries_) d = std::max(d, p.degree());
  return d;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::ShapeMismatch, "polynomial matrices differ in size");
  PolyMatrix out(a.size(), a.variable());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      Polynomial acc;
      for (std::size_t k = 0; k < a.size(); ++k) acc += a(i, k) * b(k, j);
      out(i, j) = std::move(acc);
    }
  return out;
}

PolyMatrix operator*(const Scalar& c, const PolyMatrix& a) {
  PolyMatrix out = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out(i, j) *= c;
  return out;
}

Polynomial determinant(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(1);
  PolyMatrix a = m;
  Polynomial prev = Polynomial::constant(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a(p, k).is_zero()) ++p;
      if (p == n) return {};
      for (std::size_t c = k; c < n; ++c) std::swap(a(k, c), a(p, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        auto [q, r] = divmod(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
        if (!r.is_zero()) throw std::logic_error("inexact Bareiss division over Q[w]");
        a(i, j) = std::move(q);
      }
      a(i, k) = Polynomial();
    }
    prev = a(k, k);
  }
  Polynomial d = a(n - 1, n - 1);
  return negate ? -d : d;
}

PolyMatrix adjugate(const PolyMatrix& m) {
  const std::size_t n = m.size();
  PolyMatrix adj(n, m.variable());
  if (n == 1) {
    adj(0, 0) = Polynomial::constant(1);
    return adj;
  }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      PolyMatrix minor(n - 1, m.variable());
      for (std::size_t i = 0, mi = 0; i < n; ++i) {
        if (i == r) continue;
        for (std::size_t j = 0, mj = 0; j < n; ++j) {
          if (j == c) continue;
          minor(mi, mj++) = m(i, j);
        }
        ++mi;
      }
      Polynomial cof = determinant(minor);
      if ((r + c) % 2 == 1) cof = -cof;
      adj(c, r) = std::move(cof);
    }
  return adj;
}

}  // namespace hptau
