#pragma once

#include <string>

namespace graspgate {

// Verbosity is read once from GRASPGATE_LOG (error|warn|info|debug, default
// warn). All output goes to stderr so machine-readable stdout stays clean.
enum class LogLevel { error = 0, warn = 1, info = 2, debug = 3 };

LogLevel log_level();

void log(LogLevel level, const std::string& message);

inline void log_error(const std::string& m) { log(LogLevel::error, m); }
inline void log_warn(const std::string& m) { log(LogLevel::warn, m); }
inline void log_info(const std::string& m) { log(LogLevel::info, m); }
inline void log_debug(const std::string& m) { log(LogLevel::debug, m); }

}  // namespace graspgate
