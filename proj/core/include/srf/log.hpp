#pragma once

#include <iostream>
#include <sstream>
#include <string>

namespace srf {

enum class LogLevel { Error = 0, Warn = 1, Info = 2, Debug = 3 };

/// Verbosity comes from the SRF_LOG environment variable
/// (error|warn|info|debug); default warn.
LogLevel log_level();

void log(LogLevel level, const std::string& message);

inline void log_error(const std::string& m) { log(LogLevel::Error, m); }
inline void log_warn(const std::string& m) { log(LogLevel::Warn, m); }
inline void log_info(const std::string& m) { log(LogLevel::Info, m); }
inline void log_debug(const std::string& m) { log(LogLevel::Debug, m); }

}  // namespace srf
