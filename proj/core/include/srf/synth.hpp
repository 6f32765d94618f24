#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "srf/frame.hpp"

namespace srf {

/// Scripted emission for one channel inside a segment. FER/SER channels
/// emit `profile` (optionally perturbed by `noise`); PRESENCE channels emit
/// constant face/voice observations.
struct SynthChannelScript {
    std::string channel;
    Modality modality = Modality::FER;
    double rate_hz = 1.0;
    EmotionVector profile;        // raw vector, taxonomy order
    double noise = 0.0;           // relative amplitude of seeded perturbation
    std::uint32_t face_count = 0;
    bool voice_active = false;
};

struct SynthSegment {
    std::int64_t duration_ms = 0;
    std::vector<SynthChannelScript> channels;
};

struct SynthSpec {
    std::vector<SynthSegment> segments;
};

/// Deterministic trace generation: identical (spec, seed) pairs produce
/// byte-identical traces. Output is globally ordered by (t, channel) and
/// non-decreasing in t per channel. Throws InvalidSpec.
std::vector<PerceptorFrame> synth_trace(const SynthSpec& spec, std::uint64_t seed);

/// JSON script: {"segments":[{"duration_ms":..,"channels":[{"channel":..,
/// "modality":"FER","rate_hz":..,"profile":[..],"noise":..} |
/// {"channel":..,"modality":"PRESENCE","rate_hz":..,"faces":..,"voice":bool}]}]}
SynthSpec load_synth_spec(const std::string& path);

}  // namespace srf
