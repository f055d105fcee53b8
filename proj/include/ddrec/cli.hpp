#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ddrec::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kUsage = 2,
  kNumeric = 3,
};

struct RunConfig {
  /// triangle, pmf, moments, clt, asymptotics, verify or families.
  std::string command;
  std::optional<std::string> family;       // "dowling(m=2)"
  std::optional<std::string> spec_file;
  std::optional<std::string> inline_text;  // DSL text
  std::optional<int> n;
  std::vector<int> ns;
  std::optional<int> max_n;
  std::string format = "csv";
  std::optional<std::string> out;
};

struct RunResult {
  int exit_code = kOk;
  std::string output;
  /// Machine-readable error object (JSON) when exit_code != 0, else empty.
  std::string error;
};

/// Executes one command. Never throws; every failure becomes an exit code
/// plus an error object.
RunResult run(const RunConfig& config);

/// Parses argv with CLI11, runs, and writes the output to --out or `out` and
/// any error object to `err`. Returns the process exit code.
int run_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ddrec::cli
