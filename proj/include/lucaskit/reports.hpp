#pragma once

// Command dispatch and report rendering behind the CLI.
//
// A report is one JSON document:
//   {schema_version, tool, command, params, results: [...], errata: [...],
//    status, timing}
// Everything except timing is deterministic for a fixed config, whatever the
// worker count.

#include <optional>
#include <string>
#include <utility>

#include "json.hpp"
#include "lucaskit/multiprecision.hpp"

namespace lucaskit {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

struct RunConfig {
  std::string command;
  std::string subcommand;
  std::optional<std::pair<int, int>> k;
  std::optional<long> limit;
  std::optional<long> n_max;
  std::optional<int> digits;
  std::optional<std::string> M;
  std::string format = "json";
  bool long_run = false;
  int workers = 1;

  // ErrorCode::Usage on unknown keys, bad values, or flags the command does
  // not take.
  static RunConfig from_json(const Json& j);
  Json to_json() const;
  std::string full_command() const { return subcommand.empty() ? command : command + " " + subcommand; }
};

// "7" or "2..20".
std::pair<int, int> parse_k_range(const std::string& s);
// Decimal or scientific notation naming an integer, e.g. "1.5e46".
ExactInt parse_decimal_integer(const std::string& s);
// LUCASKIT_DIGITS when set, else 64.
int default_digits();

struct Report {
  Json doc;
  int exit_code = 0;
};

// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage,
// feasibility or precision error.
Report dispatch(const RunConfig& config);
// Parses the config and dispatches; errors become an error report.
Report run_json(const std::string& config_json);

// format: json, tsv or text.
std::string render(const Report& report, const std::string& format);

}  // namespace lucaskit
