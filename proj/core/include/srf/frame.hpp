#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "srf/vector_ops.hpp"

namespace srf {

/// One timestamped estimate from one perceptor channel. FER/SER frames
/// carry a raw emotion vector (taxonomy order, post label-mapping);
/// PRESENCE frames carry face_count and/or voice_active.
struct PerceptorFrame {
    std::int64_t t_ms = 0;
    std::string channel;
    Modality modality = Modality::FER;
    std::optional<EmotionVector> raw;
    std::optional<std::uint32_t> face_count;
    std::optional<bool> voice_active;

    bool presence_active() const {
        return (face_count && *face_count > 0) || (voice_active && *voice_active);
    }
};

}  // namespace srf
