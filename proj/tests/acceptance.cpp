#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "hptau/cli.hpp"
#include "hptau/error.hpp"
#include "hptau/ode.hpp"
#include "hptau/pade.hpp"
#include "hptau/pfaffian.hpp"
#include "hptau/random.hpp"
#include "hptau/tau.hpp"

using namespace hptau;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

SeriesFamily nondegenerate(Rng& rng, std::size_t L, std::size_t n, std::size_t order) {
  for (;;) {
    SeriesFamily fam = random_family(rng, L, order);
    if (!is_zero(block_D(fam, n))) {
      try {
        hermite_pade(fam, n);
        return fam;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::DegenerateFamily) throw;
      }
    }
  }
}

template <class F>
void for_each_config(F&& body) {
  for (std::size_t L = 2; L <= 4; ++L)
    for (std::size_t n = 1; n <= 3; ++n)
      for (std::uint64_t trial = 0; trial < 100; ++trial) {
        Rng rng(trial_seed(1000 * L + n, trial));
        body(L, n, nondegenerate(rng, L, n, L * (n + 1) + 2));
      }
}

SeriesFamily counting_family(std::size_t order) {
  std::vector<Scalar> c(order);
  for (std::size_t k = 0; k < order; ++k) c[k] = static_cast<long>(k);
  return SeriesFamily({TruncatedSeries::one(order), TruncatedSeries(c, order)});
}

Outcome mahler_duality() {
  std::size_t count = 0;
  Outcome o;
  for_each_config([&](std::size_t, std::size_t n, const SeriesFamily& fam) {
    const auto hp = hermite_pade(fam, n);
    o.pass = o.pass && mahler_check(approximant_matrix(hp), simultaneous_pade(hp), n);
    ++count;
  });
  o.detail = std::to_string(count) + " families, Q(w) P(w)^T = w^{nL} I";
  return o;
}

Outcome remainder_formula() {
  std::size_t count = 0;
  Outcome o;
  for_each_config([&](std::size_t L, std::size_t n, const SeriesFamily& fam) {
    const auto hp = hermite_pade(fam, n);
    for (std::size_t i = 1; i < L && i <= 3; ++i)
      for (std::size_t j = 1; j <= 3; ++j) {
        o.pass = o.pass && hp.remainders[i].at(static_cast<long long>(L * n + j)) == rho_via_det(fam, n, i, j);
        ++count;
      }
  });
  o.detail = std::to_string(count) + " coefficients rho^i_j against (-1)^{(L+i)n} E/D";
  return o;
}

Outcome key_identity() {
  std::size_t count = 0;
  Outcome o;
  for_each_config([&](std::size_t, std::size_t n, const SeriesFamily& fam) {
    o.pass = o.pass && key_identity_check(fam, n).holds;
    ++count;
  });
  std::vector<Scalar> ones(10, Scalar(1));
  ones[0] = 0;
  const SeriesFamily geometric({TruncatedSeries::one(10), TruncatedSeries(ones, 10)});
  const auto rep = key_identity_check(geometric, 1);
  const bool degenerate_ok = rep.holds && is_zero(rep.lhs) && is_zero(rep.rhs);
  o.pass = o.pass && degenerate_ok;
  o.detail = std::to_string(count) + " random families; geometric family gives " + to_string(rep.lhs) + " = " +
             to_string(rep.rhs);
  return o;
}

bool degenerate_for(const MatrixSeries& phi, std::size_t n) {
  const auto fam = normalize_family(phi.column(0));
  for (std::size_t m = 1; m <= n + 1; ++m)
    if (is_zero(block_D(fam, m))) return true;
  return false;
}

bool shift_holds(const MatrixSeries& phi, std::size_t n) {
  const auto rep = schlesinger_shift_check(phi, n);
  return rep.holds() && determinant(rep.r) == Polynomial::constant(1);
}

Outcome schlesinger_structure() {
  Outcome o;
  std::size_t pii_checks = 0, redrawn = 0;
  for (std::uint64_t trial = 0; pii_checks < 10; ++trial) {
    Rng rng(trial_seed(40, trial));
    const auto ode = pii_system(rng.rational(), rng.rational(), rng.rational(), rng.nonzero_rational(),
                                rng.rational());
    const auto phi = expand_at_infinity(ode, 12).phi;
    const std::size_t n = 1 + trial % 2;
    if (degenerate_for(phi, n)) {
      ++redrawn;
      continue;
    }
    o.pass = o.pass && shift_holds(phi, n);
    ++pii_checks;
  }
  std::size_t random_checks = 0;
  for (std::uint64_t trial = 0; random_checks < 50; ++trial) {
    Rng rng(trial_seed(41, trial));
    const std::size_t L = 2 + trial % 2;
    const std::size_t n = 1 + (trial / 2) % 2;
    const auto phi = random_unit_matrix_series(rng, L, L * n + 6);
    if (degenerate_for(phi, n)) {
      ++redrawn;
      continue;
    }
    o.pass = o.pass && shift_holds(phi, n);
    ++random_checks;
  }
  o.detail = std::to_string(pii_checks) + " PII expansions and " + std::to_string(random_checks) +
             " random unit matrix series (" + std::to_string(redrawn) + " degenerate draws skipped)";
  return o;
}

Outcome iterated_consistency() {
  Outcome o;
  const auto fam = counting_family(12);
  const auto step = apply_schlesinger(fam, 1);
  std::vector<Scalar> expected(step.family.order());
  expected[1] = -1;
  const bool worked = step.family.series(1) == TruncatedSeries(expected, expected.size()) &&
                      block_D(step.family, 1) == -1;
  o.pass = worked;
  std::size_t count = 0;
  for (std::size_t L = 2; L <= 4; ++L)
    for (std::size_t n = 1; n <= 3; ++n)
      for (std::uint64_t trial = 0; trial < 10; ++trial) {
        Rng rng(trial_seed(50 + 10 * L + n, trial));
        const auto f = nondegenerate(rng, L, n, L * (n + 1) + 1);
        const auto s = apply_schlesinger(f, n);
        const Scalar want = Scalar(schlesinger_sign(L, n)) * block_D(f, n + 1) / block_D(f, n);
        o.pass = o.pass && block_D(s.family, 1) == want;
        ++count;
      }
  o.detail = std::string("b_k = k gives f-bar_1 = -w and D-bar_1 = ") + to_string(block_D(step.family, 1)) + "; " +
             std::to_string(count) + " random families";
  return o;
}

Outcome painleve() {
  Outcome o;
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    Rng rng(trial_seed(60, trial));
    const Scalar theta = rng.rational(), lambda = rng.rational(), mu = rng.rational(), u = rng.nonzero_rational(),
                 t = rng.rational();
    const auto ode = pii_system(theta, lambda, mu, u, t);
    const auto fam = normalize_family(expand_at_infinity(ode, 8).phi.column(0));
    o.pass = o.pass && fam.b(1, 1) == -mu / u && fam.b(1, 2) == -(theta + lambda * mu) / u &&
             fam.b(1, 3) == mu * (mu + t) / (2 * u);
  }
  o.detail = "20 random (theta, lambda, mu, u, t)";
  return o;
}

Word range_word(int from, int to) {
  Word w;
  for (int k = from; k <= to; ++k) w.push_back(k);
  return w;
}

Outcome pfaffian_suite() {
  Outcome o;
  const auto report = cli::cmd_selfcheck("pfaffian", 200, 2024);
  const auto doc = cli::Json::parse(report.text);
  o.pass = report.exit_code == cli::kOk && doc["results"]["total"] == doc["results"]["passed"];

  std::size_t permutations = 0;
  Rng rng(70);
  const SkewMap f = random_skew_table(rng, range_word(1, 6)).as_map();
  for (int len = 0; len <= 6; len += 2) {
    const Word base = range_word(1, len);
    const Scalar pf = pfaffian(f, base);
    Word k = base;
    do {
      o.pass = o.pass && pfaffian(f, k) == Scalar(sgn_permutation(base, k)) * pf;
      ++permutations;
    } while (std::next_permutation(k.begin(), k.end()));
  }
  for (int n = 1; n <= 5; ++n) {
    const PairMap g = random_pair_table(rng, range_word(1, 5), range_word(1, 5)).as_map();
    o.pass = o.pass && det_as_pfaffian(g, range_word(1, n), range_word(1, n)).holds;
  }
  o.detail = doc["results"]["total"].dump() + " randomized identity checks, " + std::to_string(permutations) +
             " index-change permutations";
  return o;
}

Outcome word_specialization() {
  Outcome o;
  std::size_t count = 0;
  for (std::size_t L = 2; L <= 3; ++L)
    for (std::size_t n = 1; n <= 2; ++n)
      for (std::uint64_t trial = 0; trial < 20; ++trial) {
        Rng rng(trial_seed(80 + 10 * L + n, trial));
        const auto rep = key_identity_via_pfaffian(random_family(rng, L, L * (n + 1)), n);
        o.pass = o.pass && rep.km_matches && rep.ikjm_matches && rep.minors_match && rep.holds();
        ++count;
      }
  o.detail = std::to_string(count) + " families; minors carry E_n^{l,k} for row word k, column word l";
  return o;
}

Outcome accessory() {
  Outcome o;
  const long long a = accessory_count({{1, 1}, {1, 1}, {1, 1}}, 2, 2);
  const long long b = accessory_count({{1, 1}, {1, 1}, {1, 1}, {1, 1}}, 2, 3);
  o.pass = a == 0 && b == 2;
  o.detail = "{(1,1)}^3 -> " + std::to_string(a) + ", {(1,1)}^4 -> " + std::to_string(b);
  return o;
}

Outcome determinism() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / "hptau_acceptance";
  std::filesystem::create_directories(dir);
  const auto input = (dir / "counting.json").string();
  std::ofstream(input) << cli::series_file_json(counting_family(12)).dump();
  const auto out = (dir / "pii.json").string();
  const cli::PiiParams pii{"1/2", "0", "-1", "1", "2"};

  const std::vector<std::function<cli::CommandResult()>> commands = {
      [&] { return cli::cmd_approx(input, 1, cli::Emit::All); },
      [&] { return cli::cmd_approx(input, 2, cli::Emit::Remainders); },
      [&] { return cli::cmd_tau(input, 3, false); },
      [&] { return cli::cmd_tau(input, 3, true); },
      [&] { return cli::cmd_ode("", pii, 10, out); },
      [&] { return cli::cmd_selfcheck("all", 30, 7); },
      [&] { return cli::cmd_accessory("1,1;1,1;1,1", 2, 2); },
  };
  for (const auto& c : commands) {
    const auto a = c();
    const auto b = c();
    o.pass = o.pass && a.exit_code == cli::kOk && a.text == b.text && a.error == b.error;
  }
  std::filesystem::remove_all(dir);
  o.detail = std::to_string(commands.size()) + " commands run twice, byte-identical";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Mahler duality", mahler_duality},
      {"remainder formula", remainder_formula},
      {"key identity", key_identity},
      {"Schlesinger structure", schlesinger_structure},
      {"iterated consistency", iterated_consistency},
      {"Painleve II coefficients", painleve},
      {"Pfaffian identity suite", pfaffian_suite},
      {"word specialization", word_specialization},
      {"accessory counts", accessory},
      {"CLI determinism", determinism},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2zu %-26s %s  %s (%.1fs)\n", k + 1, criteria[k].first.c_str(), o.pass ? "PASS" : "FAIL",
                o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
