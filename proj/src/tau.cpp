#include "hptau/tau.hpp"

#include <cstdint>
#include <cstdio>
#include <stdexcept>

#include "hptau/error.hpp"

namespace hptau {

namespace {

void require_order(const SeriesFamily& fam, std::size_t needed, const std::string& what) {
  if (fam.order() < needed) {
    throw Error(ErrorKind::InsufficientOrder, what + " needs order >= " + std::to_string(needed) + ", family has " +
                                                  std::to_string(fam.order()));
  }
}

long long as_ll(std::size_t v) { return static_cast<long long>(v); }

}  // namespace

DualForm block_D_forms(const SeriesFamily& fam, std::size_t n) {
  const std::size_t L = fam.size();
  if (n == 0) return {Scalar(1), Scalar(1)};
  require_order(fam, L * n, "D_" + std::to_string(n));
  std::vector<Matrix> full;
  for (std::size_t i = 0; i < L; ++i) full.push_back(toeplitz_block(fam, {i, 0, L * n, n}));
  std::vector<Matrix> reduced;
  for (std::size_t i = 1; i < L; ++i) reduced.push_back(toeplitz_block(fam, {i, as_ll(n), (L - 1) * n, n}));
  return {det_exact(hconcat(full)), det_exact(hconcat(reduced))};
}

Scalar block_D(const SeriesFamily& fam, std::size_t n) {
  const DualForm f = block_D_forms(fam, n);
  if (!f.agree()) throw std::logic_error("D_" + std::to_string(n) + ": full and reduced layouts disagree");
  return f.full;
}

DualForm block_E_forms(const SeriesFamily& fam, std::size_t n, std::size_t i, std::size_t j) {
  const std::size_t L = fam.size();
  if (i == 0 || i >= L) throw std::out_of_range("E_n^{i,j} needs 1 <= i <= L-1");
  if (j == 0) throw std::out_of_range("E_n^{i,j} needs j >= 1");
  require_order(fam, L * n + j + 1, "E_" + std::to_string(n) + "^{" + std::to_string(i) + "," + std::to_string(j) + "}");
  const long long ln = as_ll(L * n);
  const long long jj = as_ll(j);
  auto bottom = [&](std::size_t s) -> Matrix {
    return s == i ? toeplitz_block(fam, {s, ln + jj, 1, n + 1}) : toeplitz_block(fam, {s, ln + jj - 1, 1, n});
  };
  std::vector<Matrix> full_top, full_bottom;
  for (std::size_t s = 0; s < L; ++s) {
    full_top.push_back(s == i ? toeplitz_block(fam, {s, 1, L * n, n + 1}) : toeplitz_block(fam, {s, 0, L * n, n}));
    full_bottom.push_back(bottom(s));
  }
  std::vector<Matrix> red_top, red_bottom;
  const std::size_t h = (L - 1) * n;
  for (std::size_t s = 1; s < L; ++s) {
    red_top.push_back(s == i ? toeplitz_block(fam, {s, as_ll(n) + 1, h, n + 1}) : toeplitz_block(fam, {s, as_ll(n), h, n}));
    red_bottom.push_back(bottom(s));
  }
  return {det_exact(vconcat({hconcat(full_top), hconcat(full_bottom)})),
          det_exact(vconcat({hconcat(red_top), hconcat(red_bottom)}))};
}

Scalar block_E(const SeriesFamily& fam, std::size_t n, std::size_t i, std::size_t j) {
  const DualForm f = block_E_forms(fam, n, i, j);
  if (!f.agree()) throw std::logic_error("E_n^{i,j}: full and reduced layouts disagree");
  return f.full;
}

Scalar rho_via_det(const SeriesFamily& fam, std::size_t n, std::size_t i, std::size_t j) {
  const std::size_t L = fam.size();
  const Scalar d = block_D(fam, n);
  if (is_zero(d)) throw Error(ErrorKind::DegenerateFamily, "D_" + std::to_string(n) + " = 0");
  Scalar rho = block_E(fam, n, i, j) / d;
  if (sign_power(static_cast<long long>((L + i) * n)) < 0) rho = -rho;
  return rho;
}

IdentityReport key_identity_check(const SeriesFamily& fam, std::size_t n) {
  const std::size_t L = fam.size();
  require_order(fam, L * (n + 1), "key identity at n=" + std::to_string(n));
  IdentityReport rep;
  const Scalar dn = block_D(fam, n);
  Scalar lhs = block_D(fam, n + 1);
  for (std::size_t k = 0; k + 2 < L; ++k) lhs *= dn;
  Matrix e(L - 1, L - 1);
  for (std::size_t i = 1; i < L; ++i)
    for (std::size_t j = 1; j < L; ++j) e(i - 1, j - 1) = block_E(fam, n, i, j);
  rep.lhs = lhs;
  rep.rhs = det_exact(e);
  rep.holds = rep.lhs == rep.rhs;
  return rep;
}

std::string family_fingerprint(const SeriesFamily& fam) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ull;
    }
    h ^= 0xff;
    h *= 1099511628211ull;
  };
  mix(std::to_string(fam.size()));
  mix(std::to_string(fam.order()));
  for (const auto& s : fam.all())
    for (const auto& c : s.coefficients()) mix(to_string(c));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

TauQuotientTable tau_quotient_table(const SeriesFamily& fam, std::size_t n_max) {
  const std::size_t L = fam.size();
  require_order(fam, L * n_max, "tau quotient table up to n=" + std::to_string(n_max));
  TauQuotientTable table;
  table.fingerprint = family_fingerprint(fam);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const Scalar d = block_D(fam, n);
    table.entries.push_back({n, d, is_zero(d)});
  }
  for (std::size_t n = 0; n < n_max; ++n) {
    const Scalar& dn = table.entries[n].d;
    if (is_zero(dn)) continue;
    Matrix e(L - 1, L - 1);
    for (std::size_t i = 1; i < L; ++i)
      for (std::size_t j = 1; j < L; ++j) e(i - 1, j - 1) = block_E(fam, n, i, j);
    Scalar denom = 1;
    for (std::size_t k = 0; k + 1 < L; ++k) denom *= dn;
    TauRatio r;
    r.n = n;
    r.ratio = table.entries[n + 1].d / dn;
    r.via_e = det_exact(e) / denom;
    r.consistent = r.ratio == r.via_e;
    table.ratios.push_back(std::move(r));
  }
  return table;
}

int schlesinger_sign(std::size_t L, std::size_t n) {
  int s = 1;
  for (std::size_t i = 1; i < L; ++i) s *= sign_power(static_cast<long long>((L + i) * n));
  return s;
}

Scalar char_block_det(const MatrixSeries& phi) {
  const std::size_t L = phi.size();
  if (phi.order() < L) {
    throw Error(ErrorKind::InsufficientOrder, "characteristic block needs order >= " + std::to_string(L));
  }
  Matrix a(L - 1, L - 1);
  for (std::size_t k = 1; k < L; ++k)
    for (std::size_t i = 1; i < L; ++i) a(k - 1, i - 1) = phi(i, 0).at(static_cast<long long>(k));
  return det_exact(a);
}

ShiftReport schlesinger_shift_check(const MatrixSeries& phi, std::size_t n) {
  if (!phi.has_identity_constant()) throw Error(ErrorKind::BadNormalization, "Phi(0) must be the identity");
  const std::size_t L = phi.size();
  const SeriesFamily fam = normalize_family(phi.column(0));
  const HermitePadeResult hp = hermite_pade(fam, n);
  ShiftReport rep;
  rep.r = schlesinger_matrix(hp);
  rep.det_r_is_one = determinant(rep.r) == Polynomial::constant(1);

  // R(1/w) = w^{-n} Q(w); column 0 carries w^{-n} w^{-(L-1)n} = w^{-Ln}, the
  // others w^{-n} w^{n} = 1.
  const MatrixSeries qphi = approximant_matrix(hp) * phi;
  const std::size_t ln = L * n;
  const std::size_t order = qphi.order();
  if (order <= ln) throw Error(ErrorKind::InsufficientOrder, "Phi order must exceed Ln");
  rep.no_negative_powers = true;
  std::vector<TruncatedSeries> entries;
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = 0; j < L; ++j) {
      const TruncatedSeries& s = qphi(i, j);
      if (j != 0) {
        entries.push_back(s.truncated(order - ln));
        continue;
      }
      for (std::size_t k = 0; k < ln; ++k) rep.no_negative_powers = rep.no_negative_powers && is_zero(s.at(static_cast<long long>(k)));
      if (!rep.no_negative_powers) {
        entries.push_back(TruncatedSeries::zero(order - ln));
        continue;
      }
      entries.push_back(s.shifted_down(ln));
    }
  rep.transformed = MatrixSeries(L, std::move(entries));
  rep.checked_order = rep.transformed.order();
  rep.identity_constant = rep.transformed.has_identity_constant();
  rep.det_preserved = determinant(rep.transformed) == determinant(phi).truncated(rep.checked_order);
  return rep;
}

SchlesingerStep apply_schlesinger(const SeriesFamily& fam, std::size_t n) {
  const HermitePadeResult hp = hermite_pade(fam, n);
  const std::size_t L = fam.size();
  const std::size_t ln = L * n;
  const TruncatedSeries rho0 = hp.remainders[0].shifted_down(ln);
  const TruncatedSeries inv = series_invert(rho0);
  std::vector<TruncatedSeries> out;
  out.push_back(TruncatedSeries::one(rho0.order()));
  for (std::size_t i = 1; i < L; ++i) out.push_back(series_mul(hp.remainders[i].shifted_down(ln), inv));
  SchlesingerStep step{SeriesFamily(std::move(out)), false};
  if (step.family.order() >= L) {
    step.degenerate = is_zero(block_D(step.family, 1));
  } else {
    step.degenerate = hp.degenerate();
  }
  return step;
}

}  // namespace hptau
