#include <gtest/gtest.h>

#include <functional>

#include "hptau/error.hpp"
#include "hptau/matrix.hpp"
#include "hptau/polynomial.hpp"
#include "hptau/random.hpp"
#include "hptau/series.hpp"
#include "oracles.hpp"

using namespace hptau;

namespace {

TruncatedSeries series_of(std::vector<Scalar> c, std::size_t order) {
  c.resize(std::max(c.size(), order));
  return TruncatedSeries(std::move(c), order);
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no hptau::Error thrown";
  return ErrorKind::Parse;
}

}  // namespace

TEST(Scalar, ParsesCanonicalForms) {
  EXPECT_EQ(parse_scalar("4/6"), Scalar(2, 3));
  EXPECT_EQ(to_string(parse_scalar("4/6")), "2/3");
  EXPECT_EQ(to_string(parse_scalar("-3/6")), "-1/2");
  EXPECT_EQ(to_string(parse_scalar("+7")), "7");
  EXPECT_EQ(to_string(parse_scalar("0/5")), "0");
  EXPECT_EQ(parse_scalar("12345678901234567890123/1").get_num().get_str(), "12345678901234567890123");
}

TEST(Scalar, RejectsMalformedLiterals) {
  for (const char* bad : {"", "1/0", "abc", "1.5", "1/", "/2", "1//2", "2e3", "1/-2"}) {
    EXPECT_EQ(kind_of([&] { parse_scalar(bad); }), ErrorKind::Parse) << bad;
  }
}

TEST(Scalar, SignPower) {
  EXPECT_EQ(sign_power(0), 1);
  EXPECT_EQ(sign_power(3), -1);
  EXPECT_EQ(sign_power(10), 1);
}

TEST(Polynomial, TrimsAndMultiplies) {
  const Polynomial p({1, 1, 0, 0});
  EXPECT_EQ(p.degree(), 1);
  EXPECT_TRUE(Polynomial({0, 0}).is_zero());
  EXPECT_EQ(Polynomial().degree(), Polynomial::kZeroDegree);
  const Polynomial q({1, -1});
  EXPECT_EQ(p * q, Polynomial({1, 0, -1}));
  EXPECT_EQ(to_string(p * q), "1 - w^2");
  EXPECT_EQ(to_string(Polynomial({0, Scalar(1, 3)}), 'x'), "1/3*x");
}

TEST(Polynomial, DivmodReconstructs) {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Scalar> a(6), b(3);
    for (auto& c : a) c = rng.rational();
    for (auto& c : b) c = rng.rational();
    b.back() = rng.nonzero_rational();
    const Polynomial pa(a), pb(b);
    const auto [q, r] = divmod(pa, pb);
    EXPECT_EQ(q * pb + r, pa);
    EXPECT_LT(r.degree(), pb.degree());
  }
}

TEST(Series, MulExamples) {
  const auto prod = series_mul(series_of({1, 1}, 5), series_of({1, -1}, 5));
  EXPECT_EQ(prod, series_of({1, 0, -1}, 5));
  EXPECT_EQ(prod.order(), 5u);

  std::vector<Scalar> k(5);
  for (int i = 0; i < 5; ++i) k[i] = i;
  EXPECT_EQ(series_mul(series_of(k, 5), series_of({1, -2, 1}, 5)), series_of({0, 1}, 5));

  const auto f = series_of({0, 3, Scalar(1, 2)}, 4);
  EXPECT_EQ(series_mul(TruncatedSeries::one(6), f), f);
}

TEST(Series, MulOrderIsMinimum) {
  const auto a = series_of({1, 2, 3}, 3);
  const auto b = series_of({1, 1, 1, 1, 1, 1}, 6);
  EXPECT_EQ(series_mul(a, b).order(), 3u);
  EXPECT_EQ(series_mul(Polynomial({0, 1}), a).order(), 3u);
}

TEST(Series, MulMatchesConvolutionOracle) {
  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t oa = 1 + static_cast<std::size_t>(rng.integer(0, 8));
    const std::size_t ob = 1 + static_cast<std::size_t>(rng.integer(0, 8));
    std::vector<Scalar> a(oa), b(ob);
    for (auto& c : a) c = rng.rational();
    for (auto& c : b) c = rng.rational();
    const std::size_t order = std::min(oa, ob);
    EXPECT_EQ(series_mul(series_of(a, oa), series_of(b, ob)), series_of(oracle::convolve(a, b, order), order));
  }
}

TEST(Series, OrderContract) {
  const auto s = series_of({1, 2, 3}, 3);
  EXPECT_EQ(s.at(-1), 0);
  EXPECT_EQ(s.at(2), 3);
  EXPECT_EQ(kind_of([&] { s.at(3); }), ErrorKind::InsufficientOrder);
  EXPECT_THROW(TruncatedSeries(std::vector<Scalar>{1}, 2), std::invalid_argument);
  EXPECT_EQ(s.shifted_up(2), series_of({0, 0, 1, 2, 3}, 5));
  EXPECT_EQ(series_of({0, 0, 5, 6}, 4).shifted_down(2), series_of({5, 6}, 2));
  EXPECT_EQ(series_derivative(s), series_of({2, 6}, 2));
}

TEST(Series, InvertExamples) {
  EXPECT_EQ(series_invert(series_of({1, -1}, 4)), series_of({1, 1, 1, 1}, 4));
  EXPECT_EQ(series_invert(TruncatedSeries::one(5)), TruncatedSeries::one(5));
  EXPECT_EQ(kind_of([] { series_invert(series_of({0, 1}, 4)); }), ErrorKind::ZeroConstantTerm);
}

TEST(Series, InvertIsInverse) {
  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t order = 1 + static_cast<std::size_t>(rng.integer(0, 9));
    std::vector<Scalar> c(order);
    for (auto& x : c) x = rng.rational();
    c[0] = rng.nonzero_rational();
    const auto a = series_of(c, order);
    EXPECT_EQ(series_mul(a, series_invert(a)), TruncatedSeries::one(order));
  }
}

TEST(Series, ExpSolvesItsDifferentialEquation) {
  Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Scalar> c(8);
    for (std::size_t k = 1; k < c.size(); ++k) c[k] = rng.rational();
    const auto a = series_of(c, 8);
    const auto e = series_exp(a);
    EXPECT_EQ(e.at(0), 1);
    // (exp a)' = a' exp a
    EXPECT_EQ(series_derivative(e), series_mul(series_derivative(a), e.truncated(7)));
  }
}

TEST(Family, ValidatesNormalization) {
  EXPECT_EQ(kind_of([] { SeriesFamily({TruncatedSeries::one(4)}); }), ErrorKind::BadNormalization);
  EXPECT_EQ(kind_of([] { SeriesFamily({series_of({1, 1}, 4), series_of({0, 1}, 4)}); }), ErrorKind::BadNormalization);
  EXPECT_EQ(kind_of([] { SeriesFamily({TruncatedSeries::one(4), series_of({1, 1}, 4)}); }),
            ErrorKind::BadNormalization);
  const SeriesFamily fam({TruncatedSeries::one(6), series_of({0, 1}, 4)});
  EXPECT_EQ(fam.order(), 4u);
  EXPECT_EQ(fam.b(1, -3), 0);
  EXPECT_EQ(fam.b(0, 0), 1);
}

TEST(Family, NormalizeExamples) {
  const auto fam = normalize_family({series_of({1, 1}, 6), series_of({0, 1}, 6)});
  EXPECT_EQ(fam.series(1), series_of({0, 1, -1, 1, -1, 1}, 6));

  const auto zero = normalize_family({TruncatedSeries::one(5), TruncatedSeries::zero(5), TruncatedSeries::zero(5)});
  EXPECT_TRUE(zero.series(1).is_zero());
  EXPECT_TRUE(zero.series(2).is_zero());

  EXPECT_EQ(kind_of([] { normalize_family({series_of({2}, 3), series_of({0, 1}, 3)}); }), ErrorKind::BadNormalization);
  EXPECT_EQ(kind_of([] { normalize_family({series_of({1}, 3), series_of({1, 1}, 3)}); }), ErrorKind::BadNormalization);
}

// det(alpha^i_k) = det(beta^i_k) when alpha^i = beta^i gamma with gamma(0) = 1.
TEST(Family, UnitFactorPreservesLeadingDeterminant) {
  for (std::size_t L = 2; L <= 4; ++L) {
    for (int trial = 0; trial < 50; ++trial) {
      Rng rng(trial_seed(100 + L, static_cast<std::uint64_t>(trial)));
      const std::size_t order = L + 2;
      std::vector<Scalar> g(order);
      g[0] = 1;
      for (std::size_t k = 1; k < order; ++k) g[k] = rng.rational();
      const auto gamma = series_of(g, order);
      Matrix a(L - 1, L - 1), b(L - 1, L - 1);
      for (std::size_t i = 1; i < L; ++i) {
        std::vector<Scalar> c(order);
        for (std::size_t k = 1; k < order; ++k) c[k] = rng.rational();
        const auto beta = series_of(c, order);
        const auto alpha = series_mul(beta, gamma);
        for (std::size_t k = 1; k < L; ++k) {
          a(i - 1, k - 1) = alpha.at(static_cast<long long>(k));
          b(i - 1, k - 1) = beta.at(static_cast<long long>(k));
        }
      }
      EXPECT_EQ(det_exact(a), det_exact(b)) << "L=" << L << " trial=" << trial;
      EXPECT_EQ(det_exact(a), oracle::cofactor_det(b));
    }
  }
}
