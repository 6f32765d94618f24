#pragma once

#include <stdexcept>
#include <string>

namespace srf {

enum class ErrorCode {
    ZeroVector,
    NonFinite,
    Negative,
    DimensionMismatch,
    ZeroVariance,
    LengthMismatch,
    EmptyClip,
    EmptyPredictions,
    TooFewActors,
    InvalidSpec,
    ConfigError,
    IoError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace srf
