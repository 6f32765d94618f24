#include "srf/log.hpp"

#include <cstdlib>
#include <mutex>

namespace srf {

LogLevel log_level() {
    static const LogLevel level = [] {
        const char* env = std::getenv("SRF_LOG");
        if (!env) return LogLevel::Warn;
        const std::string v(env);
        if (v == "error") return LogLevel::Error;
        if (v == "warn") return LogLevel::Warn;
        if (v == "info") return LogLevel::Info;
        if (v == "debug") return LogLevel::Debug;
        return LogLevel::Warn;
    }();
    return level;
}

void log(LogLevel level, const std::string& message) {
    if (static_cast<int>(level) > static_cast<int>(log_level())) return;
    static std::mutex mutex;
    static const char* names[] = {"error", "warn", "info", "debug"};
    std::lock_guard lock(mutex);
    std::cerr << "srf[" << names[static_cast<int>(level)] << "] " << message << '\n';
}

}  // namespace srf
