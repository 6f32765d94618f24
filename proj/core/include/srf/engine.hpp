#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "srf/frame.hpp"
#include "srf/reward.hpp"
#include "srf/taxonomy.hpp"

namespace srf {

/// Turns an ordered frame stream into the per-tick reward stream.
///
/// Ticks fire at epoch + i * tick_period, i = 0,1,2,... The epoch is the
/// timestamp of the first ingested frame unless pinned with set_epoch().
/// Per tick, each FER/SER channel contributes its newest frame within that
/// modality's window (sample-and-hold); the presence fraction is the share
/// of presence observations in the presence window that report a face or
/// an active voice.
class Engine {
public:
    Engine(Taxonomy taxonomy, FusionConfig cfg);

    void set_epoch(std::int64_t epoch_ms);
    std::optional<std::int64_t> epoch() const { return epoch_; }

    /// Frames must arrive in merged-stream order. Throws DimensionMismatch
    /// if a vector's length differs from the taxonomy.
    void ingest(const PerceptorFrame& frame);

    /// Emits one sample per tick boundary <= now that has not fired yet.
    std::vector<RewardSample> advance(std::int64_t now_ms);

    const Taxonomy& taxonomy() const { return taxonomy_; }
    const FusionConfig& config() const { return cfg_; }

private:
    struct HeldFrame {
        std::int64_t t_ms;
        EmotionVector raw;
    };
    struct PresenceObs {
        std::int64_t t_ms;
        bool active;
    };

    RewardSample compute_tick(std::int64_t tick_ms);
    std::optional<EmotionVector> modality_mean(
        const std::map<std::string, HeldFrame>& held, std::int64_t tick_ms,
        std::int64_t window_ms) const;
    void prune(std::int64_t now_ms);

    Taxonomy taxonomy_;
    FusionConfig cfg_;
    std::optional<std::int64_t> epoch_;
    std::int64_t ticks_emitted_ = 0;

    std::map<std::string, HeldFrame> fer_held_;
    std::map<std::string, HeldFrame> ser_held_;
    std::map<std::string, std::deque<PresenceObs>> presence_;
};

/// Replay a whole merged frame list through a fresh engine. With
/// duration_ms set, ticks cover [epoch, epoch + duration); otherwise they
/// run through the last frame's timestamp. Deterministic in (frames, cfg).
std::vector<RewardSample> run(const std::vector<PerceptorFrame>& frames,
                              const FusionConfig& cfg, const Taxonomy& taxonomy,
                              std::optional<std::int64_t> duration_ms = std::nullopt);

}  // namespace srf
