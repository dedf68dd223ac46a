#include "mdpcore/logging.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace mdpcore {

namespace {

LogLevel read_level_from_env() {
    const char* raw = std::getenv("CORE_LOG");
    if (raw == nullptr) {
        return LogLevel::error;
    }
    if (std::strcmp(raw, "debug") == 0) {
        return LogLevel::debug;
    }
    if (std::strcmp(raw, "info") == 0) {
        return LogLevel::info;
    }
    return LogLevel::error;
}

}  // namespace

LogLevel log_level() {
    static const LogLevel level = read_level_from_env();
    return level;
}

bool log_enabled(LogLevel level) {
    return static_cast<int>(level) <= static_cast<int>(log_level());
}

void log(LogLevel level, const std::string& message) {
    if (!log_enabled(level)) {
        return;
    }
    const char* tag = level == LogLevel::error ? "error" : level == LogLevel::info ? "info" : "debug";
    std::fprintf(stderr, "[%s] %s\n", tag, message.c_str());
}

}  // namespace mdpcore
