#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "hptau/scalar.hpp"

namespace hptau {

/// Dense univariate polynomial over Scalar, kept without trailing zeros.
class Polynomial {
 public:
  /// Degree reported for the zero polynomial.
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs);

  static Polynomial constant(const Scalar& c);
  /// c * w^k
  static Polynomial monomial(const Scalar& c, int k);

  int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of w^k; zero outside the stored range (including k < 0).
  Scalar coefficient(int k) const;
  const std::vector<Scalar>& coefficients() const { return coeffs_; }

  Scalar evaluate(const Scalar& at) const;
  /// Multiply by w^k (k >= 0).
  Polynomial shifted(int k) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Scalar& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Scalar(-1); }
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();

  std::vector<Scalar> coeffs_;
};

/// Euclidean division: a = q*b + r with deg r < deg b. b must be nonzero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Human-readable form in the given variable, e.g. "1 - 2*w + 1/3*w^2".
std::string to_string(const Polynomial& p, char var = 'w');

}  // namespace hptau
