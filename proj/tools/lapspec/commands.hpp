#ifndef LAPSPEC_TOOLS_COMMANDS_HPP
#define LAPSPEC_TOOLS_COMMANDS_HPP

#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace lapspec::cli {

enum ExitCode : int {
  kOk = 0,
  kFailed = 1,  // verification failure, counterexample, or target not constructed
  kUsage = 2,
  kIo = 3,
};

enum class Format { kText, kJson };

struct CliConfig {
  std::optional<std::filesystem::path> cache_dir;
  Format format = Format::kText;
  int max_order = 8;
  bool allow_long_runs = false;
  /// Print bare graph6 records only (construct, search).
  bool graph6_only = false;
};

struct CommandResult {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

/// A graph6 record or a composition expression ("K2 v (K1 u P3)").
CommandResult cmd_spectrum(const std::string& input, const CliConfig& config);
CommandResult cmd_construct(const std::string& target, const CliConfig& config);
CommandResult cmd_search(const std::string& target, const CliConfig& config);
CommandResult cmd_census(int order, const CliConfig& config);
CommandResult cmd_tables(const CliConfig& config);
CommandResult cmd_conjectures(const CliConfig& config);

/// Full command line (args excludes the program name). `input` is read when a
/// spectrum argument is "-" (one record per line).
CommandResult run(const std::vector<std::string>& args, std::istream& input);

}  // namespace lapspec::cli

#endif  // LAPSPEC_TOOLS_COMMANDS_HPP
