#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hptau/matrix.hpp"
#include "hptau/poly_matrix.hpp"
#include "hptau/series.hpp"

namespace hptau {

/// Linear system for the coefficients c^i_{j,l} of the i-th Hermite-Pade row.
///
/// Row i = 0 asks the combination to equal w^{Ln}(1 + O(w)); rows i != 0 ask
/// for O(w^{Ln+1}) with c^i_{i,0} = 1 moved to the right-hand side.
struct HermitePadeSystem {
  Matrix matrix;
  std::vector<Scalar> rhs;
  /// (j, l) of each unknown column, in column order.
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
};

HermitePadeSystem hermite_pade_system(const SeriesFamily& fam, std::size_t n, std::size_t i);

struct HermitePadeResult {
  std::size_t n = 0;
  std::size_t L = 0;
  /// q[i][j] = Q^{(i)}_j(w)
  std::vector<std::vector<Polynomial>> q;
  /// rho^i(w), trusted to the family order.
  std::vector<TruncatedSeries> remainders;
  /// c[i] lists c^i_{0,*}, c^i_{1,*}, ... block by block.
  std::vector<std::vector<Scalar>> c_coeffs;
  /// The two uniqueness determinants |B^0| and |B|.
  Scalar det_b0;
  Scalar det_b;
  /// zero_remainder[i]: rho^i vanishes at every trusted coefficient.
  std::vector<bool> zero_remainder;

  bool degenerate() const;
};

/// Solves the type I problem: deg Q^{(i)}_j <= n-1+delta_ij, Q^{(i)}_i(0) = 1
/// for i != 0, and the combination vanishing to order w^{Ln} (leading 1 for
/// i = 0). Throws Error(DegenerateFamily) naming the vanishing determinant,
/// or Error(InsufficientOrder) when fam.order < Ln + 2.
HermitePadeResult hermite_pade(const SeriesFamily& fam, std::size_t n);

/// Q(w) with entries w^{1-delta_ij} Q^{(i)}_j(w).
PolyMatrix approximant_matrix(const HermitePadeResult& hp);

/// The dual matrix P with Q(w) P(w)^T = w^{nL} I, built as adjugate(Q)^T / c
/// where det Q = c w^{nL}.
PolyMatrix simultaneous_pade(const HermitePadeResult& hp);

/// P^{(i)}_j(w) read off P by removing the factor w^{1-delta_ij}.
std::vector<std::vector<Polynomial>> simultaneous_pade_table(const PolyMatrix& p);

/// True iff Q(w) P(w)^T equals w^{nL} I exactly.
bool mahler_check(const PolyMatrix& q, const PolyMatrix& p, std::size_t n);

/// holds[i][j]: f_0 P^{(i)}_j - f_j w^{1-delta_ij} P^{(i)}_0 vanishes below w^{nL}
/// at every trusted coefficient. Recorded as data; no convention is asserted.
std::vector<std::vector<bool>> simultaneous_condition_table(const SeriesFamily& fam, const PolyMatrix& p,
                                                            std::size_t n);

/// R(x) = x^n Q(1/x).
PolyMatrix schlesinger_matrix(const HermitePadeResult& hp);

}  // namespace hptau
