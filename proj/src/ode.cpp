#include "hptau/ode.hpp"

#include <stdexcept>
#include <string>

#include "hptau/error.hpp"

namespace hptau {

namespace {

bool same_shape(const Matrix& m, std::size_t L) { return m.rows() == L && m.cols() == L; }

// C(p + j, j) computed exactly.
Scalar binomial(std::size_t top, std::size_t k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), top, k);
  return Scalar(out);
}

void add_scaled(Matrix& acc, const Matrix& m, const Scalar& c) {
  for (std::size_t r = 0; r < acc.rows(); ++r)
    for (std::size_t col = 0; col < acc.cols(); ++col) acc(r, col) += c * m(r, col);
}

}  // namespace

void RationalODE::validate() const {
  if (L == 0) throw Error(ErrorKind::ShapeMismatch, "system size must be positive");
  if (r_inf < 1) throw std::invalid_argument("only irregular infinity (r_inf >= 1) is supported");
  if (inf_matrices.size() != r_inf) {
    throw Error(ErrorKind::ShapeMismatch, "expected " + std::to_string(r_inf) + " matrices at infinity");
  }
  for (const auto& m : inf_matrices)
    if (!same_shape(m, L)) throw Error(ErrorKind::ShapeMismatch, "matrix at infinity is not L x L");
  for (const auto& pole : poles) {
    if (pole.matrices.empty()) throw Error(ErrorKind::ShapeMismatch, "finite pole without matrices");
    for (const auto& m : pole.matrices)
      if (!same_shape(m, L)) throw Error(ErrorKind::ShapeMismatch, "pole matrix is not L x L");
  }
}

std::vector<Matrix> scaled_coefficients(const RationalODE& ode, std::size_t count) {
  ode.validate();
  const std::size_t L = ode.L;
  const std::size_t r = ode.r_inf;
  std::vector<Matrix> out(count, Matrix(L, L));
  for (std::size_t j = 1; j <= r; ++j)
    if (r - j < count) add_scaled(out[r - j], ode.inf_matrices[j - 1], Scalar(-1));
  // (x - a)^{-j-1} = w^{j+1} sum_p C(p+j, j) a^p w^p
  for (const auto& pole : ode.poles)
    for (std::size_t j = 0; j < pole.matrices.size(); ++j) {
      Scalar a_power(1);
      for (std::size_t idx = r + j; idx < count; ++idx) {
        const std::size_t p = idx - r - j;
        add_scaled(out[idx], pole.matrices[j], binomial(p + j, j) * a_power);
        a_power *= pole.a;
      }
    }
  return out;
}

InfinityExpansion expand_at_infinity(const RationalODE& ode, std::size_t order) {
  ode.validate();
  const std::size_t L = ode.L;
  const std::size_t r = ode.r_inf;
  const std::size_t steps = order + r;
  const std::vector<Matrix> a = scaled_coefficients(ode, steps);

  std::vector<Scalar> lambda(L);
  for (std::size_t i = 0; i < L; ++i) {
    for (std::size_t j = 0; j < L; ++j)
      if (i != j && !is_zero(a[0](i, j))) {
        throw Error(ErrorKind::NonDiagonalizableLeading, "leading matrix at infinity is not diagonal");
      }
    lambda[i] = a[0](i, i);
  }
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = i + 1; j < L; ++j)
      if (lambda[i] == lambda[j]) {
        throw Error(ErrorKind::ResonantExponents,
                    "leading eigenvalues " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
      }

  // Phi = Psi * Delta with unit-diagonal Psi and diagonal Delta; m_diag holds
  // the diagonal balance w^{r-1} T' - w^{r+1} Delta'/Delta.
  std::vector<Matrix> psi(steps, Matrix(L, L));
  std::vector<std::vector<Scalar>> m_diag(steps, std::vector<Scalar>(L));
  if (steps > 0) {
    psi[0] = Matrix::identity(L);
    m_diag[0] = lambda;
  }
  for (std::size_t k = 1; k < steps; ++k) {
    Matrix rhs = a[k];
    for (std::size_t m = 1; m < k; ++m) {
      const Matrix prod = a[m] * psi[k - m];
      add_scaled(rhs, prod, Scalar(1));
    }
    for (std::size_t i = 0; i < L; ++i) m_diag[k][i] = rhs(i, i);
    for (std::size_t i = 0; i < L; ++i)
      for (std::size_t j = 0; j < L; ++j) {
        if (i == j) continue;
        Scalar v = rhs(i, j);
        for (std::size_t m = 1; m < k; ++m) v -= psi[k - m](i, j) * m_diag[m][j];
        if (k > r) v += Scalar(static_cast<long>(k - r)) * psi[k - r](i, j);
        psi[k](i, j) = v / (lambda[j] - lambda[i]);
      }
  }

  InfinityExpansion out;
  for (std::size_t j = 1; j <= r; ++j) {
    Matrix t(L, L);
    for (std::size_t i = 0; i < L; ++i) t(i, i) = -m_diag[r - j][i];
    out.exponents.t_minus.push_back(std::move(t));
  }
  out.exponents.t0 = Matrix(L, L);
  if (r < steps)
    for (std::size_t i = 0; i < L; ++i) out.exponents.t0(i, i) = -m_diag[r][i];

  psi.resize(order);
  MatrixSeries psi_series = order == 0 ? MatrixSeries(L, 0) : MatrixSeries::from_coefficients(psi);
  MatrixSeries delta(L, order);
  for (std::size_t i = 0; i < L; ++i) {
    std::vector<Scalar> log_coeffs(order);
    for (std::size_t p = 1; p < order; ++p) log_coeffs[p] = -m_diag[p + r][i] / Scalar(static_cast<long>(p));
    delta.set(i, i, series_exp(TruncatedSeries(std::move(log_coeffs), order)));
  }
  out.phi = psi_series * delta;
  return out;
}

MatrixSeries ode_residual(const RationalODE& ode, const InfinityExpansion& expansion) {
  const std::size_t L = ode.L;
  const std::size_t r = ode.r_inf;
  const std::size_t order = expansion.phi.order();
  const std::vector<Matrix> a = scaled_coefficients(ode, order);

  std::vector<Matrix> lam(r + 1, Matrix(L, L));
  for (std::size_t j = 1; j <= r; ++j)
    for (std::size_t i = 0; i < L; ++i) lam[r - j](i, i) = -expansion.exponents.t_minus[j - 1](i, i);
  for (std::size_t i = 0; i < L; ++i) lam[r](i, i) = -expansion.exponents.t0(i, i);

  std::vector<Matrix> phi(order);
  for (std::size_t k = 0; k < order; ++k) phi[k] = expansion.phi.coefficient(k);

  std::vector<Matrix> res(order, Matrix(L, L));
  for (std::size_t k = 0; k < order; ++k) {
    if (k >= r && k - r < order) {
      add_scaled(res[k], phi[k - r], -Scalar(static_cast<long>(k - r)));
    }
    for (std::size_t m = 0; m <= k; ++m) {
      if (m <= r) add_scaled(res[k], phi[k - m] * lam[m], Scalar(1));
      add_scaled(res[k], a[m] * phi[k - m], Scalar(-1));
    }
  }
  return order == 0 ? MatrixSeries(L, 0) : MatrixSeries::from_coefficients(res);
}

RationalODE pii_system(const Scalar& theta, const Scalar& lambda, const Scalar& mu, const Scalar& u, const Scalar& t) {
  if (is_zero(u)) throw Error(ErrorKind::ZeroParameter, "u must be nonzero");
  RationalODE ode;
  ode.L = 2;
  ode.r_inf = 3;
  const Scalar half_t = t / 2;
  // A(x) = -A_{-3} x^2 - A_{-2} x - A_{-1}
  ode.inf_matrices = {
      Matrix{{-(mu + half_t), u * lambda}, {2 * (lambda * mu + theta) / u, mu + half_t}},
      Matrix{{0, -u}, {2 * mu / u, 0}},
      Matrix{{-1, 0}, {0, 1}},
  };
  return ode;
}

long long accessory_count(const SpectralType& st, long long L, long long N) {
  if (L < 1 || N < 0) throw Error(ErrorKind::InvalidPartition, "L must be positive and N nonnegative");
  if (static_cast<long long>(st.size()) != N + 1) {
    throw Error(ErrorKind::InvalidPartition,
                "expected " + std::to_string(N + 1) + " partitions, got " + std::to_string(st.size()));
  }
  long long squares = 0;
  for (std::size_t i = 0; i < st.size(); ++i) {
    long long total = 0;
    for (long long m : st[i]) {
      if (m <= 0) throw Error(ErrorKind::InvalidPartition, "partition " + std::to_string(i) + " has a nonpositive part");
      total += m;
      squares += m * m;
    }
    if (total != L) {
      throw Error(ErrorKind::InvalidPartition,
                  "partition " + std::to_string(i) + " sums to " + std::to_string(total) + ", not " + std::to_string(L));
    }
  }
  return 2 + (N - 1) * L * L - squares;
}

}  // namespace hptau
