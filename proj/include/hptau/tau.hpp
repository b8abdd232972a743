#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hptau/matrix_series.hpp"
#include "hptau/pade.hpp"
#include "hptau/series.hpp"

namespace hptau {

/// A block Toeplitz determinant evaluated through both of its layouts: the
/// full one including the f_0 blocks and the reduced one without them.
struct DualForm {
  Scalar full;
  Scalar reduced;
  bool agree() const { return full == reduced; }
};

DualForm block_D_forms(const SeriesFamily& fam, std::size_t n);
/// D_n; D_0 = 1. Throws std::logic_error if the two layouts disagree.
Scalar block_D(const SeriesFamily& fam, std::size_t n);

/// E_n^{i,j} for 1 <= i <= L-1, j >= 1.
DualForm block_E_forms(const SeriesFamily& fam, std::size_t n, std::size_t i, std::size_t j);
Scalar block_E(const SeriesFamily& fam, std::size_t n, std::size_t i, std::size_t j);

/// (-1)^{(L+i)n} E_n^{i,j} / D_n, the coefficient of w^{Ln+j} in rho^i.
/// Throws Error(DegenerateFamily) when D_n = 0.
Scalar rho_via_det(const SeriesFamily& fam, std::size_t n, std::size_t i, std::size_t j);

struct IdentityReport {
  Scalar lhs;
  Scalar rhs;
  bool holds = false;
};

/// D_{n+1} D_n^{L-2} against det(E_n^{i,j})_{1 <= i,j <= L-1}.
IdentityReport key_identity_check(const SeriesFamily& fam, std::size_t n);

struct TauEntry {
  std::size_t n = 0;
  Scalar d;
  bool degenerate = false;
};

struct TauRatio {
  std::size_t n = 0;
  /// D_{n+1} / D_n
  Scalar ratio;
  /// det(E_n^{i,j}) / D_n^{L-1}
  Scalar via_e;
  bool consistent = false;
};

/// tau_n / tau_0 = const * D_n. Ratios appear only where D_n != 0.
struct TauQuotientTable {
  std::string fingerprint;
  std::vector<TauEntry> entries;
  std::vector<TauRatio> ratios;
};

TauQuotientTable tau_quotient_table(const SeriesFamily& fam, std::size_t n_max);

/// Stable hex digest of a family's coefficients.
std::string family_fingerprint(const SeriesFamily& fam);

/// prod_{i=1}^{L-1} (-1)^{(L+i)n}
int schlesinger_sign(std::size_t L, std::size_t n);

/// det(a^{i,0}_k)_{1 <= i,k <= L-1} read from the first column of phi.
Scalar char_block_det(const MatrixSeries& phi);

struct ShiftReport {
  PolyMatrix r;
  /// R(1/w) Phi(w) diag(w^{-(L-1)n}, w^n, ..., w^n)
  MatrixSeries transformed;
  bool det_r_is_one = false;
  /// No negative powers survive in the first column.
  bool no_negative_powers = false;
  /// The transformed matrix is I at w = 0.
  bool identity_constant = false;
  /// det of the transformed matrix equals det Phi to the available order.
  bool det_preserved = false;
  std::size_t checked_order = 0;

  bool holds() const { return det_r_is_one && no_negative_powers && identity_constant && det_preserved; }
};

/// Builds R from the normalized first column of phi and checks the
/// exponent-shift structure. Throws Error(BadNormalization) unless phi(0) = I,
/// Error(DegenerateFamily), Error(InsufficientOrder).
ShiftReport schlesinger_shift_check(const MatrixSeries& phi, std::size_t n);

struct SchlesingerStep {
  SeriesFamily family;
  /// D-bar_1 of the new family vanishes (or a remainder is identically zero
  /// when the new order is too short to evaluate it).
  bool degenerate = false;
};

/// f-bar_i = rho^i / rho^0 after removing w^{Ln}; the order drops by Ln.
SchlesingerStep apply_schlesinger(const SeriesFamily& fam, std::size_t n);

}  // namespace hptau
