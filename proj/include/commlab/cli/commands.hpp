#pragma once

#include <string>
#include <vector>

#include "commlab/cli/config.hpp"

namespace commlab::cli {

struct CommandOutcome {
    int exit_code;
    std::string text; // the full report, JSON or CSV
};

/// Names accepted in RunConfig::command.
const std::vector<std::string>& command_names();

/// Runs one subcommand and renders its report. Throws UsageError (or
/// std::invalid_argument / std::runtime_error from the library) on bad input.
CommandOutcome run_command(const RunConfig& cfg);

/// Writes `text` to `path` through a temporary file and rename; "-" writes to
/// stdout.
void write_atomic(const std::string& path, const std::string& text);

/// Bundled data directory: $COMMLAB_DATA_DIR, else the build-time default.
std::string data_dir();

} // namespace commlab::cli
