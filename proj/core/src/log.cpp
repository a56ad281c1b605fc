#include "hetseg/log.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace hetseg {

LogLevel log_level() {
  static const LogLevel level = [] {
    const char* env = std::getenv("HETSEG_LOG");
    if (env == nullptr) return LogLevel::info;
    if (std::strcmp(env, "error") == 0) return LogLevel::error;
    if (std::strcmp(env, "debug") == 0) return LogLevel::debug;
    return LogLevel::info;
  }();
  return level;
}

static void emit(const char* tag, const std::string& msg) {
  std::fprintf(stderr, "[hetseg %s] %s\n", tag, msg.c_str());
}

void log_error(const std::string& msg) { emit("error", msg); }

void log_info(const std::string& msg) {
  if (log_level() >= LogLevel::info) emit("info", msg);
}

void log_debug(const std::string& msg) {
  if (log_level() >= LogLevel::debug) emit("debug", msg);
}

}  // namespace hetseg
