#pragma once

#include <string>

namespace mdpcore {

// Diagnostics go to stderr, gated by the CORE_LOG environment variable
// (error, info, debug). Standard output is reserved for data and summaries.

enum class LogLevel { error = 0, info = 1, debug = 2 };

LogLevel log_level();
bool log_enabled(LogLevel level);
void log(LogLevel level, const std::string& message);

}  // namespace mdpcore
