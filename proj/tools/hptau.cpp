#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hptau/cli.hpp"

namespace {

int emit(const hptau::cli::CommandResult& r) {
  std::cout << r.text;
  if (!r.error.empty()) std::cerr << r.error << "\n";
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace hptau::cli;
  CLI::App app{"Hermite-Pade approximants, tau quotients and their verification suites"};
  app.require_subcommand(1);

  std::string input;
  std::size_t n = 1;
  std::string emit_flag = "all";
  auto* approx = app.add_subcommand("approx", "Solve the Hermite-Pade problem for a series file");
  approx->add_option("--input", input, "Series file (JSON, v1)")->required();
  approx->add_option("--n", n, "Degree parameter n >= 1")->required();
  approx->add_option("--emit", emit_flag, "q, p, remainders or all")->check(CLI::IsMember({"q", "p", "remainders", "all"}));

  std::size_t n_max = 1;
  bool text = false;
  auto* tau = app.add_subcommand("tau", "Tabulate D_n and check the key identity");
  tau->add_option("--input", input, "Series file (JSON, v1)")->required();
  tau->add_option("--n-max", n_max, "Largest n")->required();
  tau->add_flag("--text", text, "Aligned text instead of JSON");

  std::string spec;
  std::vector<std::string> pii;
  std::size_t order = 10;
  std::string out;
  auto* ode = app.add_subcommand("ode", "Expand a linear system at infinity");
  auto* spec_opt = ode->add_option("--spec", spec, "ODE spec file (JSON, v1)");
  auto* pii_opt = ode->add_option("--pii", pii, "theta lambda mu u t")->expected(5)->allow_extra_args(false);
  spec_opt->excludes(pii_opt);
  ode->add_option("--order", order, "Expansion order");
  ode->add_option("--out", out, "Write the normalized series file here");

  std::string suite = "all";
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  auto* selfcheck = app.add_subcommand("selfcheck", "Randomized exact identity suites");
  selfcheck->add_option("--suite", suite, "pfaffian, identities or all")
      ->check(CLI::IsMember({"pfaffian", "identities", "all"}));
  selfcheck->add_option("--trials", trials, "Trials per suite");
  selfcheck->add_option("--seed", seed, "Seed (the SEED environment variable wins)");

  std::string spectral;
  long long L = 0;
  long long N = 0;
  auto* accessory = app.add_subcommand("accessory", "Count accessory parameters of a spectral type");
  accessory->add_option("--spectral", spectral, "Partitions, e.g. \"1,1;1,1;1,1\"")->required();
  accessory->add_option("--L", L, "System size")->required();
  accessory->add_option("--N", N, "Number of finite singular points")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (approx->parsed()) return emit(cmd_approx(input, n, *parse_emit(emit_flag)));
  if (tau->parsed()) return emit(cmd_tau(input, n_max, text));
  if (ode->parsed()) {
    if (spec.empty() == pii.empty()) {
      std::cerr << "ode needs exactly one of --spec or --pii\n";
      return kUsage;
    }
    std::optional<PiiParams> params;
    if (!pii.empty()) params = PiiParams{pii[0], pii[1], pii[2], pii[3], pii[4]};
    return emit(cmd_ode(spec, params, order, out));
  }
  if (selfcheck->parsed()) {
    try {
      seed = effective_seed(seed);
    } catch (const hptau::Error& e) {
      std::cerr << e.what() << "\n";
      return kUsage;
    }
    return emit(cmd_selfcheck(suite, trials, seed));
  }
  return emit(cmd_accessory(spectral, L, N));
}
