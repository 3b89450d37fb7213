#pragma once

#include <string>

#include "suitlint/config.hpp"
#include "suitlint/report.hpp"

namespace suitlint {

// Severity-filtered logging to stderr.
enum class LogLevel { error = 0, warn = 1, info = 2, debug = 3 };
void set_log_level(const std::string& name);
void log_message(LogLevel level, const std::string& message);

// Builds the full report without writing it; throws on fatal errors.
Report analyze_snapshot(const ToolConfig& config);
Report analyze_history(const ToolConfig& config);

// Full pipelines: analyze, emit the report atomically, surface diagnostics
// on the log stream. Return the process exit status.
int run_snapshot(const ToolConfig& config);
int run_history(const ToolConfig& config);

}  // namespace suitlint
