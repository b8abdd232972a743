#include "hptau/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hptau/error.hpp"

namespace hptau {

TruncatedSeries::TruncatedSeries(std::vector<Scalar> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < order) {
    throw std::invalid_argument("series has " + std::to_string(coeffs_.size()) + " coefficients, order " +
                                std::to_string(order) + " requested");
  }
  coeffs_.resize(order);
}

TruncatedSeries TruncatedSeries::zero(std::size_t order) { return {std::vector<Scalar>(order), order}; }

TruncatedSeries TruncatedSeries::one(std::size_t order) {
  std::vector<Scalar> c(order);
  if (order > 0) c[0] = 1;
  return {std::move(c), order};
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p, std::size_t order) {
  std::vector<Scalar> c(order);
  for (std::size_t k = 0; k < order; ++k) c[k] = p.coefficient(static_cast<int>(k));
  return {std::move(c), order};
}

Scalar TruncatedSeries::at(long long k) const {
  if (k < 0) return Scalar(0);
  if (static_cast<std::size_t>(k) >= coeffs_.size()) {
    throw Error(ErrorKind::InsufficientOrder,
                "coefficient " + std::to_string(k) + " requested, series known to order " + std::to_string(coeffs_.size()));
  }
  return coeffs_[static_cast<std::size_t>(k)];
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  if (order > coeffs_.size()) {
    throw Error(ErrorKind::InsufficientOrder, "cannot extend a series from order " + std::to_string(coeffs_.size()) +
                                                  " to " + std::to_string(order));
  }
  return {coeffs_, order};
}

TruncatedSeries TruncatedSeries::shifted_up(std::size_t k) const {
  std::vector<Scalar> c(k);
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  const std::size_t order = c.size();
  return {std::move(c), order};
}

TruncatedSeries TruncatedSeries::shifted_down(std::size_t k) const {
  if (k > coeffs_.size()) throw Error(ErrorKind::InsufficientOrder, "shift exceeds the known order");
  for (std::size_t j = 0; j < k; ++j) {
    if (!hptau::is_zero(coeffs_[j])) throw std::domain_error("series is not divisible by w^" + std::to_string(k));
  }
  std::vector<Scalar> c(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end());
  const std::size_t order = c.size();
  return {std::move(c), order};
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& x) { return hptau::is_zero(x); });
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<Scalar> c(order);
  for (std::size_t k = 0; k < order; ++k) c[k] = a.coefficients()[k] + b.coefficients()[k];
  return {std::move(c), order};
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<Scalar> c(order);
  for (std::size_t k = 0; k < order; ++k) c[k] = a.coefficients()[k] - b.coefficients()[k];
  return {std::move(c), order};
}

TruncatedSeries operator*(const Scalar& s, const TruncatedSeries& a) {
  std::vector<Scalar> c(a.coefficients().begin(), a.coefficients().end());
  for (auto& x : c) x *= s;
  return {std::move(c), a.order()};
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  const auto ca = a.coefficients();
  const auto cb = b.coefficients();
  std::vector<Scalar> c(order);
  for (std::size_t i = 0; i < order; ++i) {
    if (hptau::is_zero(ca[i])) continue;
    for (std::size_t j = 0; i + j < order; ++j) c[i + j] += ca[i] * cb[j];
  }
  return {std::move(c), order};
}

TruncatedSeries series_mul(const Polynomial& p, const TruncatedSeries& a) {
  const std::size_t order = a.order();
  const auto ca = a.coefficients();
  const auto& cp = p.coefficients();
  std::vector<Scalar> c(order);
  for (std::size_t i = 0; i < cp.size() && i < order; ++i) {
    if (hptau::is_zero(cp[i])) continue;
    for (std::size_t j = 0; i + j < order; ++j) c[i + j] += cp[i] * ca[j];
  }
  return {std::move(c), order};
}

TruncatedSeries series_invert(const TruncatedSeries& a) {
  const std::size_t order = a.order();
  if (order == 0) return TruncatedSeries::zero(0);
  const auto ca = a.coefficients();
  if (hptau::is_zero(ca[0])) throw Error(ErrorKind::ZeroConstantTerm, "cannot invert a series with zero constant term");
  std::vector<Scalar> inv(order);
  const Scalar lead_inv = 1 / ca[0];
  inv[0] = lead_inv;
  for (std::size_t k = 1; k < order; ++k) {
    Scalar acc(0);
    for (std::size_t j = 1; j <= k; ++j) acc += ca[j] * inv[k - j];
    inv[k] = -acc * lead_inv;
  }
  return {std::move(inv), order};
}

TruncatedSeries series_derivative(const TruncatedSeries& a) {
  if (a.order() == 0) return a;
  const auto ca = a.coefficients();
  std::vector<Scalar> c(a.order() - 1);
  for (std::size_t k = 1; k < a.order(); ++k) c[k - 1] = ca[k] * static_cast<unsigned long>(k);
  const std::size_t order = c.size();
  return {std::move(c), order};
}

TruncatedSeries series_exp(const TruncatedSeries& a) {
  const std::size_t order = a.order();
  if (order == 0) return a;
  const auto ca = a.coefficients();
  if (!hptau::is_zero(ca[0])) throw std::domain_error("series_exp needs a zero constant term");
  // E' = a' E, i.e. k e_k = sum_{j=1..k} j a_j e_{k-j}
  std::vector<Scalar> e(order);
  e[0] = 1;
  for (std::size_t k = 1; k < order; ++k) {
    Scalar acc(0);
    for (std::size_t j = 1; j <= k; ++j) acc += ca[j] * static_cast<unsigned long>(j) * e[k - j];
    e[k] = acc / static_cast<unsigned long>(k);
  }
  return {std::move(e), order};
}

SeriesFamily::SeriesFamily(std::vector<TruncatedSeries> series) : series_(std::move(series)) {
  if (series_.size() < 2) throw Error(ErrorKind::BadNormalization, "a family needs at least two series");
  order_ = series_[0].order();
  for (const auto& s : series_) order_ = std::min(order_, s.order());
  for (auto& s : series_) s = s.truncated(order_);
  if (order_ == 0) throw Error(ErrorKind::BadNormalization, "a family needs order >= 1");
  const auto c0 = series_[0].coefficients();
  for (std::size_t k = 0; k < order_; ++k) {
    if (c0[k] != (k == 0 ? 1 : 0)) throw Error(ErrorKind::BadNormalization, "f_0 must be the constant series 1");
  }
  for (std::size_t i = 1; i < series_.size(); ++i) {
    if (!hptau::is_zero(series_[i].coefficients()[0])) {
      throw Error(ErrorKind::BadNormalization, "f_" + std::to_string(i) + "(0) must vanish");
    }
  }
}

SeriesFamily SeriesFamily::truncated(std::size_t order) const {
  std::vector<TruncatedSeries> cut;
  cut.reserve(series_.size());
  for (const auto& s : series_) cut.push_back(s.truncated(order));
  return SeriesFamily(std::move(cut));
}

SeriesFamily normalize_family(const std::vector<TruncatedSeries>& first_column) {
  if (first_column.size() < 2) throw Error(ErrorKind::BadNormalization, "a column needs at least two entries");
  std::size_t order = first_column[0].order();
  for (const auto& s : first_column) order = std::min(order, s.order());
  if (order == 0) throw Error(ErrorKind::BadNormalization, "column entries carry no coefficients");
  if (first_column[0].at(0) != 1) throw Error(ErrorKind::BadNormalization, "phi_{0,0}(0) must equal 1");
  for (std::size_t i = 1; i < first_column.size(); ++i) {
    if (!hptau::is_zero(first_column[i].at(0))) {
      throw Error(ErrorKind::BadNormalization, "phi_{" + std::to_string(i) + ",0}(0) must vanish");
    }
  }
  const TruncatedSeries inv = series_invert(first_column[0].truncated(order));
  std::vector<TruncatedSeries> out;
  out.reserve(first_column.size());
  out.push_back(TruncatedSeries::one(order));
  for (std::size_t i = 1; i < first_column.size(); ++i) out.push_back(series_mul(first_column[i].truncated(order), inv));
  return SeriesFamily(std::move(out));
}

}  // namespace hptau
