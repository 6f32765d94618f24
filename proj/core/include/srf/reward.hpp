#pragma once

#include <cstdint>
#include <optional>

#include "srf/taxonomy.hpp"
#include "srf/vector_ops.hpp"

namespace srf {

enum class MissingModalityPolicy { ZeroContribution };

/// Design parameters of the reward: unit-norm modality weight vectors,
/// gain coefficients, tick grid, and window lengths.
struct FusionConfig {
    EmotionVector w_fer;   // unit L2 norm
    EmotionVector w_ser;   // unit L2 norm
    double k_fer = 1.0;
    double k_ser = 0.25;
    double k_presence = 0.1;
    std::int64_t tick_period_ms = 100;
    std::int64_t fer_window_ms = 500;
    std::int64_t ser_window_ms = 2000;
    std::int64_t presence_window_ms = 1000;
    MissingModalityPolicy missing_modality_policy = MissingModalityPolicy::ZeroContribution;

    /// Defaults for a taxonomy: weights favour happiness and surprise,
    /// penalise the four negative classes, ignore neutral; SER gain
    /// attenuated relative to FER.
    static FusionConfig defaults(const Taxonomy& taxonomy);

    /// Throws ConfigError naming the violated invariant.
    void validate(const Taxonomy& taxonomy) const;

    std::int64_t max_window_ms() const;
};

/// Per-tick output of the fusion engine. r_total is bitwise the sum of
/// the three components; an absent modality vector means that component
/// is exactly 0.
struct RewardSample {
    std::int64_t tick_time_ms = 0;
    double r_total = 0.0;
    double r_fer = 0.0;
    double r_ser = 0.0;
    double r_presence = 0.0;
    std::optional<EmotionVector> x_fer;
    std::optional<EmotionVector> x_ser;
    double presence = 0.0;  // presence fraction in [0,1]
};

struct RewardBreakdown {
    double r_total = 0.0;
    double r_fer = 0.0;
    double r_ser = 0.0;
    double r_presence = 0.0;
};

/// r = k_fer <w_fer, x_fer> + k_ser <w_ser, x_ser> + k_presence * presence,
/// with an absent modality contributing exactly 0.
RewardBreakdown reward(const std::optional<EmotionVector>& x_fer,
                       const std::optional<EmotionVector>& x_ser, double presence,
                       const FusionConfig& cfg);

}  // namespace srf
