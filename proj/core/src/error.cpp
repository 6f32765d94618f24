#include "srf/error.hpp"

namespace srf {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::ZeroVector: return "ZeroVector";
        case ErrorCode::NonFinite: return "NonFinite";
        case ErrorCode::Negative: return "Negative";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::ZeroVariance: return "ZeroVariance";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::EmptyClip: return "EmptyClip";
        case ErrorCode::EmptyPredictions: return "EmptyPredictions";
        case ErrorCode::TooFewActors: return "TooFewActors";
        case ErrorCode::InvalidSpec: return "InvalidSpec";
        case ErrorCode::ConfigError: return "ConfigError";
        case ErrorCode::IoError: return "IoError";
    }
    return "UnknownError";
}

}  // namespace srf
