#include "hptau/pfaffian.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "hptau/error.hpp"
#include "hptau/tau.hpp"

namespace hptau {

void SkewTable::set(Letter i, Letter j, Scalar value) {
  if (i == j) {
    if (!is_zero(value)) throw std::invalid_argument("a skew map vanishes on the diagonal");
    return;
  }
  if (i < j) {
    upper_[{i, j}] = std::move(value);
  } else {
    upper_[{j, i}] = -value;
  }
}

Scalar SkewTable::operator()(Letter i, Letter j) const {
  if (i == j) return Scalar(0);
  const bool flip = i > j;
  const auto it = upper_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
  if (it == upper_.end()) return Scalar(0);
  return flip ? Scalar(-it->second) : it->second;
}

SkewMap SkewTable::as_map() const {
  return [table = *this](Letter i, Letter j) { return table(i, j); };
}

Scalar PairTable::operator()(Letter i, Letter j) const {
  const auto it = table_.find({i, j});
  return it == table_.end() ? Scalar(0) : it->second;
}

PairMap PairTable::as_map() const {
  return [table = *this](Letter i, Letter j) { return table(i, j); };
}

std::vector<std::pair<Letter, Letter>> PerfectMatching::arcs() const {
  std::vector<std::pair<Letter, Letter>> out;
  for (std::size_t k = 0; k + 1 < word.size(); k += 2) out.emplace_back(word[k], word[k + 1]);
  return out;
}

bool has_duplicates(const Word& w) {
  std::set<Letter> seen;
  for (Letter x : w)
    if (!seen.insert(x).second) return true;
  return false;
}

int sgn_permutation(const Word& i, const Word& j) {
  if (i.size() != j.size() || has_duplicates(i)) return 0;
  std::vector<std::size_t> perm;
  perm.reserve(j.size());
  std::vector<bool> used(i.size(), false);
  for (Letter x : j) {
    const auto it = std::find(i.begin(), i.end(), x);
    if (it == i.end()) return 0;
    const auto pos = static_cast<std::size_t>(it - i.begin());
    if (used[pos]) return 0;
    used[pos] = true;
    perm.push_back(pos);
  }
  std::size_t inversions = 0;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

std::size_t arc_crossings(const PerfectMatching& m) {
  std::size_t crossings = 0;
  for (std::size_t a = 0; a + 1 < m.positions.size(); a += 2)
    for (std::size_t b = a + 2; b + 1 < m.positions.size(); b += 2) {
      const auto [p, q] = std::minmax(m.positions[a], m.positions[a + 1]);
      const auto [r, s] = std::minmax(m.positions[b], m.positions[b + 1]);
      if ((p < r && r < q && q < s) || (r < p && p < s && s < q)) ++crossings;
    }
  return crossings;
}

namespace {

void require_even(const Word& w, const char* what) {
  if (w.size() % 2 != 0) {
    throw Error(ErrorKind::OddLength, std::string(what) + " has odd length " + std::to_string(w.size()));
  }
}

void enumerate_matchings(const Word& word, std::vector<std::size_t>& open, std::vector<std::size_t>& chosen,
                         std::vector<PerfectMatching>& out) {
  if (open.empty()) {
    PerfectMatching m;
    m.positions = chosen;
    for (std::size_t p : chosen) m.word.push_back(word[p]);
    out.push_back(std::move(m));
    return;
  }
  const std::size_t first = open.front();
  for (std::size_t t = 1; t < open.size(); ++t) {
    const std::size_t partner = open[t];
    std::vector<std::size_t> rest;
    rest.reserve(open.size() - 2);
    for (std::size_t u = 1; u < open.size(); ++u)
      if (u != t) rest.push_back(open[u]);
    chosen.push_back(first);
    chosen.push_back(partner);
    enumerate_matchings(word, rest, chosen, out);
    chosen.resize(chosen.size() - 2);
  }
}

// Each leaf of this recursion is one perfect matching; pairing the first open
// letter with the t-th open letter contributes (-1)^{t-1} to its sign.
Scalar pfaffian_sum(const SkewMap& f, const Word& word, const std::vector<std::size_t>& open) {
  if (open.empty()) return Scalar(1);
  Scalar acc(0);
  const Letter head = word[open.front()];
  for (std::size_t t = 1; t < open.size(); ++t) {
    const Scalar weight = f(head, word[open[t]]);
    if (is_zero(weight)) continue;
    std::vector<std::size_t> rest;
    rest.reserve(open.size() - 2);
    for (std::size_t u = 1; u < open.size(); ++u)
      if (u != t) rest.push_back(open[u]);
    const Scalar term = weight * pfaffian_sum(f, word, rest);
    if (t % 2 == 1) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

}  // namespace

std::vector<PerfectMatching> perfect_matchings(const Word& i) {
  require_even(i, "word");
  std::vector<std::size_t> open(i.size());
  for (std::size_t k = 0; k < open.size(); ++k) open[k] = k;
  std::vector<std::size_t> chosen;
  std::vector<PerfectMatching> out;
  enumerate_matchings(i, open, chosen, out);
  return out;
}

Scalar pfaffian(const SkewMap& f, const Word& i) {
  require_even(i, "word");
  if (i.empty()) return Scalar(1);
  if (has_duplicates(i)) return Scalar(0);
  std::vector<std::size_t> open(i.size());
  for (std::size_t k = 0; k < open.size(); ++k) open[k] = k;
  return pfaffian_sum(f, i, open);
}

Word erase_at(const Word& w, std::size_t pos) {
  Word out = w;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(pos));
  return out;
}

Word concat(std::initializer_list<Word> parts) {
  Word out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

PfaffianIdentityReport plucker_check(const SkewMap& f, const Word& i, const Word& j, const Word& k) {
  if (i.size() % 2 != 1 || j.size() % 2 != 1 || k.size() % 2 != 0) {
    throw Error(ErrorKind::ParityViolation, "Plucker relation needs |I|, |J| odd and |K| even");
  }
  const Word ij = concat({i, j});
  PfaffianIdentityReport rep;
  for (std::size_t p = 0; p < i.size(); ++p) {
    const Word rest = erase_at(i, p);
    const int s = sgn_permutation(ij, concat({rest, Word{i[p]}, j}));
    if (s == 0) continue;
    const Scalar term = pfaffian(f, concat({rest, k})) * pfaffian(f, concat({Word{i[p]}, j, k}));
    rep.lhs += s > 0 ? term : Scalar(-term);
  }
  for (std::size_t q = 0; q < j.size(); ++q) {
    const Word rest = erase_at(j, q);
    const int s = sgn_permutation(ij, concat({i, Word{j[q]}, rest}));
    if (s == 0) continue;
    const Scalar term = pfaffian(f, concat({i, Word{j[q]}, k})) * pfaffian(f, concat({rest, k}));
    rep.rhs += s > 0 ? term : Scalar(-term);
  }
  rep.holds = rep.lhs == rep.rhs;
  return rep;
}

PfaffianIdentityReport knuth_check(const SkewMap& f, const Word& i, std::size_t j_pos, const Word& k) {
  if (i.size() % 2 != 0 || k.size() % 2 != 0) throw Error(ErrorKind::ParityViolation, "needs |I| and |K| even");
  if (j_pos >= i.size()) throw std::out_of_range("j_pos outside the word");
  const Letter j = i[j_pos];
  PfaffianIdentityReport rep;
  for (std::size_t p = 0; p < i.size(); ++p) {
    if (p == j_pos) continue;
    Word rest;
    for (std::size_t u = 0; u < i.size(); ++u)
      if (u != p && u != j_pos) rest.push_back(i[u]);
    const int s = sgn_permutation(i, concat({rest, Word{i[p], j}}));
    if (s == 0) continue;
    const Scalar term = pfaffian(f, concat({rest, k})) * pfaffian(f, concat({Word{i[p], j}, k}));
    rep.lhs += s > 0 ? term : Scalar(-term);
  }
  rep.rhs = pfaffian(f, concat({i, k})) * pfaffian(f, k);
  rep.holds = rep.lhs == rep.rhs;
  return rep;
}

PfaffianIdentityReport knuth_power_check(const SkewMap& f, const Word& i, const Word& k) {
  if (i.size() % 2 != 0 || k.size() % 2 != 0) throw Error(ErrorKind::ParityViolation, "needs |I| and |K| even");
  const SkewMap big_f = [&f, &k](Letter a, Letter b) { return pfaffian(f, concat({Word{a, b}, k})); };
  PfaffianIdentityReport rep;
  rep.lhs = pfaffian(big_f, i);
  const std::size_t n = i.size() / 2;
  if (n == 0) {
    rep.rhs = 1;
  } else {
    const Scalar pk = pfaffian(f, k);
    rep.rhs = pfaffian(f, concat({i, k}));
    for (std::size_t t = 1; t < n; ++t) rep.rhs *= pk;
  }
  rep.holds = rep.lhs == rep.rhs;
  return rep;
}

Scalar det_g(const PairMap& g, const Word& rows, const Word& cols) {
  if (rows.size() != cols.size()) throw Error(ErrorKind::ShapeMismatch, "det_g needs words of equal length");
  Matrix m(rows.size(), cols.size());
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < cols.size(); ++b) m(a, b) = g(rows[a], cols[b]);
  return det_exact(m);
}

Word interleave(const Word& i, const Word& j) {
  if (i.size() != j.size()) throw Error(ErrorKind::ShapeMismatch, "interleave needs words of equal length");
  Word out;
  for (std::size_t k = 0; k < i.size(); ++k) {
    out.push_back(row_letter(i[k]));
    out.push_back(col_letter(j[k]));
  }
  return out;
}

SkewMap skew_from_pairs(const PairMap& g) {
  return [g](Letter a, Letter b) -> Scalar {
    const bool a_row = (a & 1) != 0;
    const bool b_row = (b & 1) != 0;
    if (a_row && !b_row) return g((a + 1) / 2, b / 2);
    if (!a_row && b_row) return -g((b + 1) / 2, a / 2);
    return Scalar(0);
  };
}

PfaffianIdentityReport det_as_pfaffian(const PairMap& g, const Word& i, const Word& j) {
  if (i.size() != j.size()) throw Error(ErrorKind::ShapeMismatch, "det_as_pfaffian needs |I| = |J|");
  PfaffianIdentityReport rep;
  rep.lhs = pfaffian(skew_from_pairs(g), interleave(i, j));
  rep.rhs = det_g(g, i, j);
  rep.holds = rep.lhs == rep.rhs;
  return rep;
}

PfaffianIdentityReport sylvester_det(const PairMap& g, const Word& i, const Word& j, const Word& k, const Word& m) {
  if (i.size() != j.size() || k.size() != m.size()) {
    throw Error(ErrorKind::ShapeMismatch, "Sylvester's identity needs |I| = |J| and |K| = |M|");
  }
  const std::size_t n = i.size();
  Matrix minors(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) minors(a, b) = det_g(g, concat({Word{i[a]}, k}), concat({Word{j[b]}, m}));
  PfaffianIdentityReport rep;
  rep.lhs = det_exact(minors);
  if (n == 0) {
    rep.rhs = 1;
  } else {
    const Scalar km = det_g(g, k, m);
    rep.rhs = det_g(g, concat({i, k}), concat({j, m}));
    for (std::size_t t = 1; t < n; ++t) rep.rhs *= km;
  }
  rep.holds = rep.lhs == rep.rhs;
  return rep;
}

PairMap block_pair_map(const SeriesFamily& fam, std::size_t n) {
  const std::size_t L = fam.size();
  if (fam.order() < L * (n + 1)) {
    throw Error(ErrorKind::InsufficientOrder,
                "block weight construction at n=" + std::to_string(n) + " needs order >= " + std::to_string(L * (n + 1)));
  }
  const long long block = static_cast<long long>(n + 1);
  const long long alphabet = static_cast<long long>((L - 1) * (n + 1));
  return [fam, block, alphabet](Letter r, Letter c) -> Scalar {
    if (r < 1 || c < 1 || r > alphabet || c > alphabet) throw std::out_of_range("letter outside the block alphabet");
    const long long s = (c - 1) / block + 1;
    return fam.b(static_cast<std::size_t>(s), r - c + s * block);
  };
}

KeyIdentityPfaffianReport key_identity_via_pfaffian(const SeriesFamily& fam, std::size_t n) {
  const std::size_t L = fam.size();
  const PairMap g = block_pair_map(fam, n);
  const int nn = static_cast<int>(n);
  const int l1 = static_cast<int>(L - 1);
  const int alphabet = l1 * (nn + 1);

  KeyIdentityPfaffianReport rep;
  for (int k = 1; k <= l1; ++k) {
    rep.i.push_back(l1 * nn + k);
    rep.j.push_back((k - 1) * (nn + 1) + 1);
  }
  for (int r = 1; r <= l1 * nn; ++r) rep.k.push_back(r);
  for (int c = 1; c <= alphabet; ++c)
    if (std::find(rep.j.begin(), rep.j.end(), c) == rep.j.end()) rep.m.push_back(c);

  rep.det_km = det_g(g, rep.k, rep.m);
  rep.d_n = block_D(fam, n);
  rep.km_matches = rep.det_km == rep.d_n;

  rep.det_ikjm = det_g(g, concat({rep.i, rep.k}), concat({rep.j, rep.m}));
  rep.d_n1 = block_D(fam, n + 1);
  rep.d_n1_sign = sign_power(static_cast<long long>(L * (L - 1) * n / 2));
  rep.ikjm_matches = rep.det_ikjm == rep.d_n1_sign * rep.d_n1;

  rep.minors.assign(L - 1, std::vector<Scalar>(L - 1));
  rep.e_values.assign(L - 1, std::vector<Scalar>(L - 1));
  rep.minors_match = true;
  int column_signs = 1;
  for (std::size_t b = 1; b < L; ++b) column_signs *= sign_power(static_cast<long long>((L - b) * n));
  for (std::size_t a = 1; a < L; ++a)
    for (std::size_t b = 1; b < L; ++b) {
      const Scalar minor = det_g(g, concat({Word{rep.i[a - 1]}, rep.k}), concat({Word{rep.j[b - 1]}, rep.m}));
      const Scalar e = block_E(fam, n, b, a);
      rep.minors[a - 1][b - 1] = minor;
      rep.e_values[a - 1][b - 1] = e;
      rep.minors_match = rep.minors_match && minor == sign_power(static_cast<long long>((L - b) * n)) * e;
    }

  rep.sylvester = sylvester_det(g, rep.i, rep.j, rep.k, rep.m);
  // Undo the signs: det(minors) = prod_b (-1)^{(L-b)n} det(E), and
  // det_g(IK, JM) = (-1)^{L(L-1)n/2} D_{n+1}.
  rep.key_rhs = column_signs * rep.sylvester.lhs;
  rep.key_lhs = rep.d_n1_sign * rep.sylvester.rhs;

  const IdentityReport block = key_identity_check(fam, n);
  rep.block_lhs = block.lhs;
  rep.block_rhs = block.rhs;
  rep.routes_agree = rep.key_lhs == rep.block_lhs && rep.key_rhs == rep.block_rhs;
  return rep;
}

}  // namespace hptau
