// Copyright (C) 2026 The logconcave Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LOGCONCAVE_TOOLS_CLI_HPP_
#define LOGCONCAVE_TOOLS_CLI_HPP_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace logconcave::cli {

enum class OutputFormat { Tsv, Csv, Json, Markdown };

struct CliConfig {
  std::string subcommand;
  std::optional<std::filesystem::path> cache_dir;
  OutputFormat format = OutputFormat::Csv;
  unsigned jobs = 0;
  bool verbose = false;
};

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation. `args` excludes the program name. `stdout_is_tty`
/// selects the default output format (markdown on a terminal, CSV otherwise).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        bool stdout_is_tty = false);

/// --cache-dir, then $LOGCONCAVE_CACHE, then $XDG_CACHE_HOME/logconcave, then
/// $HOME/.cache/logconcave.
std::optional<std::filesystem::path> default_cache_dir();

}  // namespace logconcave::cli

#endif  // LOGCONCAVE_TOOLS_CLI_HPP_
