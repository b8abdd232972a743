#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hptau/error.hpp"
#include "hptau/ode.hpp"
#include "hptau/series.hpp"

namespace hptau::cli {

using Json = nlohmann::ordered_json;

/// Exit codes shared by every command.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDegenerate = 2,
  kInsufficientOrder = 3,
  kCheckFailed = 4,
};

int exit_code_for(ErrorKind kind);

/// Text written to stdout plus the process exit code. On failure `text` is
/// empty and `error` holds the message for stderr.
struct CommandResult {
  std::string text;
  std::string error;
  int exit_code = kOk;
};

/// {"v":1,"L":..,"order":..,"series":[[...],...]} with rationals as strings.
SeriesFamily parse_series_file(const Json& doc);
SeriesFamily read_series_file(const std::string& path);
Json series_file_json(const SeriesFamily& fam);

/// Explicit system or {"v":1,"preset":"pii",...}.
RationalODE parse_ode_spec(const Json& doc);
RationalODE read_ode_spec(const std::string& path);

/// "1,1;2" -> {{1,1},{2}}. Throws Error(Parse).
SpectralType parse_spectral(const std::string& text);

/// Seed after applying the SEED environment override.
std::uint64_t effective_seed(std::uint64_t flag_seed);

enum class Emit { Q, P, Remainders, All };
std::optional<Emit> parse_emit(const std::string& text);

struct PiiParams {
  std::string theta, lambda, mu, u, t;
};

CommandResult cmd_approx(const std::string& input, std::size_t n, Emit emit);
CommandResult cmd_tau(const std::string& input, std::size_t n_max, bool text);
/// Exactly one of spec_path / pii is used; out_path may be empty.
CommandResult cmd_ode(const std::string& spec_path, const std::optional<PiiParams>& pii, std::size_t order,
                      const std::string& out_path);
CommandResult cmd_selfcheck(const std::string& suite, std::size_t trials, std::uint64_t seed);
CommandResult cmd_accessory(const std::string& spectral, long long L, long long N);

}  // namespace hptau::cli
