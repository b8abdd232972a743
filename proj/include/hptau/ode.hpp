#pragma once

#include <cstddef>
#include <vector>

#include "hptau/matrix.hpp"
#include "hptau/matrix_series.hpp"
#include "hptau/scalar.hpp"

namespace hptau {

/// A finite singular point a with matrices[j] = A_{-j}, 0 <= j <= rank.
struct FinitePole {
  Scalar a;
  std::vector<Matrix> matrices;

  std::size_t rank() const { return matrices.empty() ? 0 : matrices.size() - 1; }
};

/// dY/dx = A(x) Y with
///   A(x) = sum_mu sum_j A_{mu,-j} (x - a_mu)^{-j-1} - sum_j A_{inf,-j} x^{j-1}.
/// inf_matrices[j - 1] = A_{inf,-j} for 1 <= j <= r_inf.
struct RationalODE {
  std::size_t L = 0;
  std::vector<FinitePole> poles;
  std::size_t r_inf = 0;
  std::vector<Matrix> inf_matrices;

  /// Checks the shapes; throws Error(ShapeMismatch).
  void validate() const;
};

/// Exponential part at infinity,
///   T(x) = sum_j T_{-j} w^{-j} / (-j) + T_0 log w,  w = 1/x.
/// t_minus[j - 1] = T_{-j}.
struct InfinityExponentData {
  std::vector<Matrix> t_minus;
  Matrix t0;
};

/// Partitions of L, one per singular point.
using SpectralType = std::vector<std::vector<long long>>;

struct InfinityExpansion {
  MatrixSeries phi;
  InfinityExponentData exponents;
};

/// Coefficients of w^{r_inf - 1} A(1/w) for w^0 .. w^{count-1}.
std::vector<Matrix> scaled_coefficients(const RationalODE& ode, std::size_t count);

/// Formal solution Y = Phi(w) e^{T(x)} with Phi(0) = I, trusted to `order`.
/// Needs a diagonal leading matrix A_{inf,-r} with distinct entries; throws
/// Error(NonDiagonalizableLeading) or Error(ResonantExponents).
InfinityExpansion expand_at_infinity(const RationalODE& ode, std::size_t order);

/// -w^{r+1} Phi' + Phi w^{r-1} T'(x) - w^{r-1} A Phi, to the order of Phi.
/// Zero exactly when the expansion solves the system.
MatrixSeries ode_residual(const RationalODE& ode, const InfinityExpansion& expansion);

/// The 2x2 linear problem of Painleve II,
///   A(x) = diag(1,-1) x^2 + [[0, u], [-2mu/u, 0]] x
///        + [[mu + t/2, -u lambda], [-2(lambda mu + theta)/u, -mu - t/2]],
/// with r_inf = 3 and no finite poles. Throws Error(ZeroParameter) when u = 0.
RationalODE pii_system(const Scalar& theta, const Scalar& lambda, const Scalar& mu, const Scalar& u, const Scalar& t);

/// 2 + (N-1) L^2 - sum m^2 over N+1 partitions of L. Throws
/// Error(InvalidPartition).
long long accessory_count(const SpectralType& st, long long L, long long N);

}  // namespace hptau
