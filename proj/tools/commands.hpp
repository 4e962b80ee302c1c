#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace rinfty::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsage = 2 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommandOptions {
  std::string command;
  std::filesystem::path fixture;
  std::optional<int> max_weight;
  std::optional<int> max_lambda;
  std::optional<int> max_arity;
  std::string format = "text";  // text | machine
};

struct CommandResult {
  int status = kPass;
  std::string report;
};

/// Throws UsageError or ParseError; check failures are reported, not thrown.
CommandResult run_command(const CommandOptions& options);

/// Full command line: parses argv, runs, writes the report to out (or to
/// --output) and diagnostics to err. Returns the exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rinfty::cli
