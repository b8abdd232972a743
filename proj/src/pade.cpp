#include "hptau/pade.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hptau/error.hpp"

namespace hptau {

namespace {

std::size_t block_width(std::size_t n, std::size_t i, std::size_t j) { return i == j ? n + 1 : n; }

/// Coefficient of c^i_{j,l} in the w^k coefficient of
/// Q^{(i)}_i f_i + sum_{j != i} w Q^{(i)}_j f_j.
Scalar system_entry(const SeriesFamily& fam, std::size_t i, std::size_t j, std::size_t l, long long k) {
  const long long shift = (i == j) ? 0 : 1;
  return fam.b(j, k - shift - static_cast<long long>(l));
}

Scalar uniqueness_det_b0(const SeriesFamily& fam, std::size_t n) {
  const std::size_t L = fam.size();
  std::vector<Matrix> blocks;
  blocks.push_back(toeplitz_block(fam, {0, 0, L * n + 1, n + 1}));
  for (std::size_t j = 1; j < L; ++j) blocks.push_back(toeplitz_block(fam, {j, -1, L * n + 1, n}));
  return det_exact(hconcat(blocks));
}

Scalar uniqueness_det_b(const SeriesFamily& fam, std::size_t n) {
  const std::size_t L = fam.size();
  std::vector<Matrix> blocks;
  for (std::size_t j = 0; j < L; ++j) blocks.push_back(toeplitz_block(fam, {j, 0, L * n, n}));
  return det_exact(hconcat(blocks));
}

}  // namespace

bool HermitePadeResult::degenerate() const {
  for (std::size_t i = 1; i < zero_remainder.size(); ++i)
    if (zero_remainder[i]) return true;
  return false;
}

HermitePadeSystem hermite_pade_system(const SeriesFamily& fam, std::size_t n, std::size_t i) {
  const std::size_t L = fam.size();
  if (i >= L) throw std::out_of_range("row index outside the family");
  HermitePadeSystem sys;
  for (std::size_t j = 0; j < L; ++j)
    for (std::size_t l = 0; l < block_width(n, i, j); ++l) {
      if (i != 0 && j == i && l == 0) continue;
      sys.unknowns.emplace_back(j, l);
    }
  const std::size_t first_k = (i == 0) ? 0 : 1;
  const std::size_t last_k = L * n;
  const std::size_t rows = last_k - first_k + 1;
  sys.matrix = Matrix(rows, sys.unknowns.size());
  sys.rhs.assign(rows, Scalar(0));
  for (std::size_t r = 0; r < rows; ++r) {
    const long long k = static_cast<long long>(first_k + r);
    for (std::size_t c = 0; c < sys.unknowns.size(); ++c) {
      const auto [j, l] = sys.unknowns[c];
      sys.matrix(r, c) = system_entry(fam, i, j, l, k);
    }
    if (i == 0) {
      sys.rhs[r] = (static_cast<std::size_t>(k) == last_k) ? 1 : 0;
    } else {
      sys.rhs[r] = -system_entry(fam, i, i, 0, k);
    }
  }
  return sys;
}

HermitePadeResult hermite_pade(const SeriesFamily& fam, std::size_t n) {
  if (n == 0) throw std::invalid_argument("hermite_pade needs n >= 1");
  const std::size_t L = fam.size();
  if (fam.order() < L * n + 2) {
    throw Error(ErrorKind::InsufficientOrder, "Hermite-Pade of degree n=" + std::to_string(n) + " needs order >= " +
                                                  std::to_string(L * n + 2) + ", family has " +
                                                  std::to_string(fam.order()));
  }
  HermitePadeResult hp;
  hp.n = n;
  hp.L = L;
  hp.det_b0 = uniqueness_det_b0(fam, n);
  hp.det_b = uniqueness_det_b(fam, n);
  if (is_zero(hp.det_b0)) throw Error(ErrorKind::DegenerateFamily, "|B^0| = 0 (no unique solution for row 0)");
  if (is_zero(hp.det_b)) throw Error(ErrorKind::DegenerateFamily, "|B| = D_n = 0 (no unique solution for rows i != 0)");

  hp.q.assign(L, std::vector<Polynomial>(L));
  hp.c_coeffs.assign(L, {});
  for (std::size_t i = 0; i < L; ++i) {
    const HermitePadeSystem sys = hermite_pade_system(fam, n, i);
    const std::vector<Scalar> x = solve_exact(sys.matrix, sys.rhs);
    std::vector<std::vector<Scalar>> coeffs(L);
    for (std::size_t j = 0; j < L; ++j) coeffs[j].assign(block_width(n, i, j), Scalar(0));
    if (i != 0) coeffs[i][0] = 1;
    for (std::size_t c = 0; c < x.size(); ++c) coeffs[sys.unknowns[c].first][sys.unknowns[c].second] = x[c];
    for (std::size_t j = 0; j < L; ++j) {
      hp.c_coeffs[i].insert(hp.c_coeffs[i].end(), coeffs[j].begin(), coeffs[j].end());
      hp.q[i][j] = Polynomial(std::move(coeffs[j]));
    }
  }

  const std::size_t order = fam.order();
  const std::size_t ln = L * n;
  for (std::size_t i = 0; i < L; ++i) {
    TruncatedSeries rho = TruncatedSeries::zero(order);
    for (std::size_t j = 0; j < L; ++j) {
      const Polynomial entry = (i == j) ? hp.q[i][j] : hp.q[i][j].shifted(1);
      rho = rho + series_mul(entry, fam.series(j));
    }
    for (std::size_t k = 0; k <= ln; ++k) {
      const Scalar expected = (i == 0 && k == ln) ? 1 : 0;
      if (rho.at(static_cast<long long>(k)) != expected) {
        throw std::logic_error("remainder rho^" + std::to_string(i) + " violates the approximation order at w^" +
                               std::to_string(k));
      }
    }
    hp.zero_remainder.push_back(rho.is_zero());
    hp.remainders.push_back(std::move(rho));
  }
  return hp;
}

PolyMatrix approximant_matrix(const HermitePadeResult& hp) {
  PolyMatrix q(hp.L, 'w');
  for (std::size_t i = 0; i < hp.L; ++i)
    for (std::size_t j = 0; j < hp.L; ++j) q(i, j) = (i == j) ? hp.q[i][j] : hp.q[i][j].shifted(1);
  return q;
}

PolyMatrix simultaneous_pade(const HermitePadeResult& hp) {
  const PolyMatrix q = approximant_matrix(hp);
  const Polynomial det = determinant(q);
  const int nl = static_cast<int>(hp.n * hp.L);
  const Scalar c = det.coefficient(nl);
  if (is_zero(c) || !(det == Polynomial::monomial(c, nl))) {
    throw Error(ErrorKind::DegenerateFamily, "det Q(w) = " + to_string(det) + " is not c*w^" + std::to_string(nl) +
                                                 " with c != 0");
  }
  return Scalar(1 / c) * adjugate(q).transposed();
}

std::vector<std::vector<Polynomial>> simultaneous_pade_table(const PolyMatrix& p) {
  const std::size_t L = p.size();
  std::vector<std::vector<Polynomial>> table(L, std::vector<Polynomial>(L));
  const Polynomial w = Polynomial::monomial(1, 1);
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = 0; j < L; ++j) {
      if (i == j) {
        table[i][j] = p(i, j);
        continue;
      }
      auto [quot, rem] = divmod(p(i, j), w);
      if (!rem.is_zero()) throw std::logic_error("off-diagonal entry of P is not divisible by w");
      table[i][j] = std::move(quot);
    }
  return table;
}

bool mahler_check(const PolyMatrix& q, const PolyMatrix& p, std::size_t n) {
  if (q.size() != p.size()) return false;
  const PolyMatrix prod = q * p.transposed();
  const std::size_t L = q.size();
  const Polynomial diag = Polynomial::monomial(1, static_cast<int>(n * L));
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = 0; j < L; ++j) {
      if (!(prod(i, j) == (i == j ? diag : Polynomial()))) return false;
    }
  return true;
}

std::vector<std::vector<bool>> simultaneous_condition_table(const SeriesFamily& fam, const PolyMatrix& p,
                                                            std::size_t n) {
  const std::size_t L = p.size();
  const auto table = simultaneous_pade_table(p);
  const std::size_t limit = std::min(n * L, fam.order());
  std::vector<std::vector<bool>> holds(L, std::vector<bool>(L, false));
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = 0; j < L; ++j) {
      const Polynomial p0 = (i == j) ? table[i][0] : table[i][0].shifted(1);
      const TruncatedSeries lhs = series_mul(table[i][j], fam.series(0)) - series_mul(p0, fam.series(j));
      bool ok = true;
      for (std::size_t k = 0; k < limit; ++k) ok = ok && is_zero(lhs.at(static_cast<long long>(k)));
      holds[i][j] = ok;
    }
  return holds;
}

PolyMatrix schlesinger_matrix(const HermitePadeResult& hp) {
  const PolyMatrix q = approximant_matrix(hp);
  const int n = static_cast<int>(hp.n);
  PolyMatrix r(hp.L, 'x');
  for (std::size_t i = 0; i < hp.L; ++i)
    for (std::size_t j = 0; j < hp.L; ++j) {
      const Polynomial& entry = q(i, j);
      if (entry.degree() > n) throw std::logic_error("Q(w) entry exceeds degree n");
      std::vector<Scalar> coeffs(static_cast<std::size_t>(n) + 1);
      for (int k = 0; k <= n; ++k) coeffs[static_cast<std::size_t>(n - k)] = entry.coefficient(k);
      r(i, j) = Polynomial(std::move(coeffs));
    }
  return r;
}

}  // namespace hptau
