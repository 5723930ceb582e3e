#include "graspgate/log.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <mutex>

namespace graspgate {

namespace {

LogLevel parse_level() {
  const char* env = std::getenv("GRASPGATE_LOG");
  if (env == nullptr || *env == '\0') return LogLevel::warn;
  if (std::strcmp(env, "error") == 0) return LogLevel::error;
  if (std::strcmp(env, "warn") == 0) return LogLevel::warn;
  if (std::strcmp(env, "info") == 0) return LogLevel::info;
  if (std::strcmp(env, "debug") == 0) return LogLevel::debug;
  std::fprintf(stderr, "[graspgate] warn: unknown GRASPGATE_LOG value '%s', using warn\n", env);
  return LogLevel::warn;
}

const char* level_tag(LogLevel level) {
  switch (level) {
    case LogLevel::error: return "error";
    case LogLevel::warn: return "warn";
    case LogLevel::info: return "info";
    case LogLevel::debug: return "debug";
  }
  return "?";
}

std::mutex& log_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

LogLevel log_level() {
  static const LogLevel level = parse_level();
  return level;
}

void log(LogLevel level, const std::string& message) {
  if (static_cast<int>(level) > static_cast<int>(log_level())) return;
  std::lock_guard<std::mutex> lock(log_mutex());
  std::fprintf(stderr, "[graspgate] %s: %s\n", level_tag(level), message.c_str());
}

}  // namespace graspgate
