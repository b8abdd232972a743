#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

#include "hptau/matrix.hpp"
#include "hptau/scalar.hpp"
#include "hptau/series.hpp"

namespace hptau {

using Letter = int;
using Word = std::vector<Letter>;

/// Skew-symmetric weight f(i, j) = -f(j, i) on pairs of letters.
using SkewMap = std::function<Scalar(Letter, Letter)>;
/// Arbitrary weight g(i, j) on row letters x column letters.
using PairMap = std::function<Scalar(Letter, Letter)>;

/// Dense skew-symmetric table; only the upper triangle is stored, so the
/// skew law holds by construction. Unset pairs weigh zero.
class SkewTable {
 public:
  void set(Letter i, Letter j, Scalar value);
  Scalar operator()(Letter i, Letter j) const;
  SkewMap as_map() const;

 private:
  std::map<std::pair<Letter, Letter>, Scalar> upper_;
};

/// Dense g(i, j) table; unset pairs weigh zero.
class PairTable {
 public:
  void set(Letter i, Letter j, Scalar value) { table_[{i, j}] = std::move(value); }
  Scalar operator()(Letter i, Letter j) const;
  PairMap as_map() const;

 private:
  std::map<std::pair<Letter, Letter>, Scalar> table_;
};

/// A perfect matching J = j_1 j_2 ... j_{2n} of a word I, with the positions
/// sigma (0-based) such that j_k = i_{sigma(k)}.
struct PerfectMatching {
  Word word;
  std::vector<std::size_t> positions;

  /// The arcs (j_{2k-1}, j_{2k}).
  std::vector<std::pair<Letter, Letter>> arcs() const;
};

bool has_duplicates(const Word& w);

/// Sign of the permutation turning I into J; 0 if I has a repeated letter or
/// J is not a rearrangement of I.
int sgn_permutation(const Word& i, const Word& j);

/// Number of pairwise crossings of the arcs of m drawn above the word.
std::size_t arc_crossings(const PerfectMatching& m);

/// All (2n-1)!! matchings, smallest unpaired position first. Throws
/// Error(OddLength).
std::vector<PerfectMatching> perfect_matchings(const Word& i);

/// Pf_f(I) = sum over matchings of sgn(I, J) prod f(arc); Pf_f() = 1 and
/// Pf_f(I) = 0 when I repeats a letter. Throws Error(OddLength).
Scalar pfaffian(const SkewMap& f, const Word& i);

/// Removes the letter at `pos`.
Word erase_at(const Word& w, std::size_t pos);
Word concat(std::initializer_list<Word> parts);

struct PfaffianIdentityReport {
  Scalar lhs;
  Scalar rhs;
  bool holds = false;
};

/// Plucker relation for Pfaffians with |I|, |J| odd and |K| even. Throws
/// Error(ParityViolation).
PfaffianIdentityReport plucker_check(const SkewMap& f, const Word& i, const Word& j, const Word& k);

/// The single-letter specialization: for the letter at position `j_pos` of I,
/// sum_{i != j} sgn(I, (I \ ij) i j) Pf((I \ ij)K) Pf(ijK) = Pf(IK) Pf(K).
/// |I|, |K| even.
PfaffianIdentityReport knuth_check(const SkewMap& f, const Word& i, std::size_t j_pos, const Word& k);

/// Pf_F(I) = Pf(IK) Pf(K)^{n-1} with F(i, j) = Pf(ijK), |I| = 2n, |K| even.
PfaffianIdentityReport knuth_power_check(const SkewMap& f, const Word& i, const Word& k);

/// det(g(i_a, j_b)); the empty minor is 1. Throws Error(ShapeMismatch).
Scalar det_g(const PairMap& g, const Word& rows, const Word& cols);

/// Letter encodings used to embed row and column alphabets into one.
inline Letter row_letter(Letter i) { return 2 * i - 1; }
inline Letter col_letter(Letter j) { return 2 * j; }

/// The interleaved word m(I, J) = i_1' j_1'' i_2' j_2'' ...
Word interleave(const Word& i, const Word& j);
/// f_g: g on (row, column) letter pairs, -g on (column, row), 0 otherwise.
SkewMap skew_from_pairs(const PairMap& g);

/// Pf_{f_g}(m(I, J)) against det_g(I, J). Throws Error(ShapeMismatch).
PfaffianIdentityReport det_as_pfaffian(const PairMap& g, const Word& i, const Word& j);

/// det(det_g(iK, jM))_{i in I, j in J} against det_g(IK, JM) det_g(K, M)^{n-1}.
/// Throws Error(ShapeMismatch).
PfaffianIdentityReport sylvester_det(const PairMap& g, const Word& i, const Word& j, const Word& k, const Word& m);

/// The word/sign construction that turns Sylvester's identity into
/// D_{n+1} D_n^{L-2} = det(E_n^{i,j}).
struct KeyIdentityPfaffianReport {
  Word i, j, k, m;
  Scalar det_km;
  Scalar d_n;
  Scalar det_ikjm;
  Scalar d_n1;
  int d_n1_sign = 1;
  /// minors[a][b] = det_g(i_a K, j_b M); e_values[a][b] = E_n^{b,a}.
  std::vector<std::vector<Scalar>> minors;
  std::vector<std::vector<Scalar>> e_values;
  bool km_matches = false;
  bool ikjm_matches = false;
  bool minors_match = false;
  /// Sylvester's identity on these words (n replaced by L-1).
  PfaffianIdentityReport sylvester;
  /// D_{n+1} D_n^{L-2} and det(E) recovered from the Sylvester sides.
  Scalar key_lhs;
  Scalar key_rhs;
  /// Same quantities through block_D / block_E.
  Scalar block_lhs;
  Scalar block_rhs;
  bool routes_agree = false;

  bool holds() const { return km_matches && ikjm_matches && minors_match && sylvester.holds && routes_agree; }
};

/// Builds g(r, c) = b^s_{r - c + s(n+1)} with s = floor((c-1)/(n+1)) + 1 on
/// R = C = {1, ..., (L-1)(n+1)}. Throws Error(InsufficientOrder).
PairMap block_pair_map(const SeriesFamily& fam, std::size_t n);

KeyIdentityPfaffianReport key_identity_via_pfaffian(const SeriesFamily& fam, std::size_t n);

}  // namespace hptau
