#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hptau/polynomial.hpp"
#include "hptau/scalar.hpp"

namespace hptau {

/// Formal power series sum_k c_k w^k known exactly for k < order.
///
/// Reading a coefficient at or beyond the order throws
/// Error(InsufficientOrder); reading at a negative index yields zero.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  /// Keeps the first `order` coefficients; coeffs.size() must be >= order.
  TruncatedSeries(std::vector<Scalar> coeffs, std::size_t order);

  static TruncatedSeries zero(std::size_t order);
  static TruncatedSeries one(std::size_t order);
  static TruncatedSeries from_polynomial(const Polynomial& p, std::size_t order);

  std::size_t order() const { return coeffs_.size(); }
  Scalar at(long long k) const;
  std::span<const Scalar> coefficients() const { return coeffs_; }

  TruncatedSeries truncated(std::size_t order) const;
  /// Multiply by w^k; the order grows by k.
  TruncatedSeries shifted_up(std::size_t k) const;
  /// Divide by w^k; the k leading coefficients must vanish.
  TruncatedSeries shifted_down(std::size_t k) const;
  /// True when every trusted coefficient is zero.
  bool is_zero() const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Scalar> coeffs_;
};

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const Scalar& c, const TruncatedSeries& a);

/// Cauchy product; order = min(a.order, b.order).
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
/// Exact polynomial times series; the order of `a` is kept.
TruncatedSeries series_mul(const Polynomial& p, const TruncatedSeries& a);
/// Multiplicative inverse; throws Error(ZeroConstantTerm) when a(0) = 0.
TruncatedSeries series_invert(const TruncatedSeries& a);
/// d/dw; order drops by one.
TruncatedSeries series_derivative(const TruncatedSeries& a);
/// exp(a) for a(0) = 0.
TruncatedSeries series_exp(const TruncatedSeries& a);

/// The L series f_0 = 1, f_1, ..., f_{L-1} with f_i(0) = 0 for i != 0, all
/// trusted to a common order. Coefficients are written b(i, k).
class SeriesFamily {
 public:
  /// Validates the normalization; throws Error(BadNormalization).
  explicit SeriesFamily(std::vector<TruncatedSeries> series);

  std::size_t size() const { return series_.size(); }
  std::size_t order() const { return order_; }
  const TruncatedSeries& series(std::size_t i) const { return series_[i]; }
  const std::vector<TruncatedSeries>& all() const { return series_; }
  Scalar b(std::size_t i, long long k) const { return series_[i].at(k); }

  /// Same family with every series cut to `order`.
  SeriesFamily truncated(std::size_t order) const;

 private:
  std::vector<TruncatedSeries> series_;
  std::size_t order_ = 0;
};

/// f_i = phi_i / phi_0 for a column with phi_0(0) = 1, phi_i(0) = 0.
SeriesFamily normalize_family(const std::vector<TruncatedSeries>& first_column);

}  // namespace hptau
