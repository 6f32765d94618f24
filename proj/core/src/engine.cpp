#include "srf/engine.hpp"

#include "srf/error.hpp"

namespace srf {

Engine::Engine(Taxonomy taxonomy, FusionConfig cfg)
    : taxonomy_(std::move(taxonomy)), cfg_(std::move(cfg)) {
    cfg_.validate(taxonomy_);
}

void Engine::set_epoch(std::int64_t epoch_ms) { epoch_ = epoch_ms; }

void Engine::ingest(const PerceptorFrame& frame) {
    if (!epoch_) epoch_ = frame.t_ms;
    switch (frame.modality) {
        case Modality::FER:
        case Modality::SER: {
            const EmotionVector& raw = frame.raw.value();
            if (raw.size() != taxonomy_.size()) {
                throw Error(ErrorCode::DimensionMismatch,
                            "frame k=" + std::to_string(raw.size()) + ", taxonomy k=" +
                                std::to_string(taxonomy_.size()));
            }
            auto& held = frame.modality == Modality::FER ? fer_held_ : ser_held_;
            held.insert_or_assign(frame.channel, HeldFrame{frame.t_ms, raw});
            break;
        }
        case Modality::PRESENCE:
            presence_[frame.channel].push_back(
                PresenceObs{frame.t_ms, frame.presence_active()});
            break;
    }
}

std::vector<RewardSample> Engine::advance(std::int64_t now_ms) {
    std::vector<RewardSample> out;
    if (!epoch_) return out;
    while (true) {
        const std::int64_t tick = *epoch_ + ticks_emitted_ * cfg_.tick_period_ms;
        if (tick > now_ms) break;
        out.push_back(compute_tick(tick));
        ++ticks_emitted_;
        prune(tick);
    }
    return out;
}

std::optional<EmotionVector> Engine::modality_mean(
    const std::map<std::string, HeldFrame>& held, std::int64_t tick_ms,
    std::int64_t window_ms) const {
    ModalitySnapshot snapshot;
    for (const auto& [channel, frame] : held) {
        if (frame.t_ms <= tick_ms && frame.t_ms > tick_ms - window_ms) {
            snapshot.vectors.push_back(normalize_unit(frame.raw));
            snapshot.model_ids.push_back(channel);
        }
    }
    return average_modality(snapshot);
}

RewardSample Engine::compute_tick(std::int64_t tick_ms) {
    RewardSample sample;
    sample.tick_time_ms = tick_ms;
    sample.x_fer = modality_mean(fer_held_, tick_ms, cfg_.fer_window_ms);
    sample.x_ser = modality_mean(ser_held_, tick_ms, cfg_.ser_window_ms);

    std::int64_t total = 0;
    std::int64_t active = 0;
    for (const auto& [channel, obs] : presence_) {
        for (const PresenceObs& o : obs) {
            if (o.t_ms <= tick_ms && o.t_ms > tick_ms - cfg_.presence_window_ms) {
                ++total;
                if (o.active) ++active;
            }
        }
    }
    sample.presence =
        total == 0 ? 0.0 : static_cast<double>(active) / static_cast<double>(total);

    const RewardBreakdown b = reward(sample.x_fer, sample.x_ser, sample.presence, cfg_);
    sample.r_total = b.r_total;
    sample.r_fer = b.r_fer;
    sample.r_ser = b.r_ser;
    sample.r_presence = b.r_presence;
    return sample;
}

void Engine::prune(std::int64_t now_ms) {
    const std::int64_t horizon = now_ms - cfg_.max_window_ms();
    for (auto* held : {&fer_held_, &ser_held_}) {
        for (auto it = held->begin(); it != held->end();) {
            it = it->second.t_ms <= horizon ? held->erase(it) : std::next(it);
        }
    }
    for (auto& [channel, obs] : presence_) {
        while (!obs.empty() && obs.front().t_ms <= now_ms - cfg_.presence_window_ms) {
            obs.pop_front();
        }
    }
}

std::vector<RewardSample> run(const std::vector<PerceptorFrame>& frames,
                              const FusionConfig& cfg, const Taxonomy& taxonomy,
                              std::optional<std::int64_t> duration_ms) {
    Engine engine(taxonomy, cfg);
    const std::int64_t epoch = frames.empty() ? 0 : frames.front().t_ms;
    engine.set_epoch(epoch);

    std::optional<std::int64_t> last_tick;  // inclusive end of the tick grid
    if (duration_ms) {
        if (*duration_ms <= 0) return {};
        last_tick = epoch + *duration_ms - 1;
    } else if (!frames.empty()) {
        last_tick = frames.back().t_ms;
    } else {
        return {};
    }

    std::vector<RewardSample> out;
    for (const PerceptorFrame& frame : frames) {
        // Fire all ticks strictly before this frame's timestamp; a frame at
        // exactly a tick boundary is visible to that tick.
        auto emitted = engine.advance(std::min(frame.t_ms - 1, *last_tick));
        out.insert(out.end(), emitted.begin(), emitted.end());
        engine.ingest(frame);
    }
    auto emitted = engine.advance(*last_tick);
    out.insert(out.end(), emitted.begin(), emitted.end());
    return out;
}

}  // namespace srf
