#include "srf/reward.hpp"

#include <cmath>
#include <string>

#include "srf/error.hpp"

namespace srf {

namespace {

constexpr double kNormTolerance = 1e-9;

void check_unit(const EmotionVector& w, const char* name, const Taxonomy& taxonomy) {
    if (w.size() != taxonomy.size()) {
        throw Error(ErrorCode::ConfigError,
                    std::string(name) + " has " + std::to_string(w.size()) +
                        " entries, taxonomy has " + std::to_string(taxonomy.size()));
    }
    const double n = l2_norm(w);
    if (std::abs(n - 1.0) > kNormTolerance) {
        throw Error(ErrorCode::ConfigError, std::string(name) + " is not unit L2 norm (|" +
                                                name + "| = " + std::to_string(n) + ")");
    }
}

}  // namespace

FusionConfig FusionConfig::defaults(const Taxonomy& taxonomy) {
    FusionConfig cfg;
    EmotionVector w(taxonomy.size(), 0.0);
    auto set = [&](const char* label, double value) {
        if (auto i = taxonomy.index_of(label)) w[*i] = value;
    };
    set("happiness", 1.0);
    set("surprise", 0.5);
    set("anger", -1.0);
    set("disgust", -1.0);
    set("fear", -1.0);
    set("sadness", -1.0);
    const double n = l2_norm(w);
    if (n > 0.0) {
        for (double& x : w) x /= n;
    } else {
        // Taxonomy without any of the named classes: fall back to the first axis.
        w[0] = 1.0;
    }
    cfg.w_fer = w;
    cfg.w_ser = w;
    return cfg;
}

void FusionConfig::validate(const Taxonomy& taxonomy) const {
    check_unit(w_fer, "w_fer", taxonomy);
    check_unit(w_ser, "w_ser", taxonomy);
    if (!std::isfinite(k_fer) || !std::isfinite(k_ser) || !std::isfinite(k_presence)) {
        throw Error(ErrorCode::ConfigError, "gain coefficients must be finite");
    }
    if (tick_period_ms <= 0) {
        throw Error(ErrorCode::ConfigError, "tick_period must be > 0");
    }
    for (auto [w, name] : {std::pair{fer_window_ms, "fer_window"},
                           {ser_window_ms, "ser_window"},
                           {presence_window_ms, "presence_window"}}) {
        if (w < tick_period_ms) {
            throw Error(ErrorCode::ConfigError,
                        std::string(name) + " must be >= tick_period");
        }
    }
}

std::int64_t FusionConfig::max_window_ms() const {
    return std::max({fer_window_ms, ser_window_ms, presence_window_ms});
}

RewardBreakdown reward(const std::optional<EmotionVector>& x_fer,
                       const std::optional<EmotionVector>& x_ser, double presence,
                       const FusionConfig& cfg) {
    RewardBreakdown out;
    if (x_fer) {
        if (x_fer->size() != cfg.w_fer.size()) {
            throw Error(ErrorCode::DimensionMismatch, "x_fer vs w_fer");
        }
        out.r_fer = cfg.k_fer * dot(cfg.w_fer, *x_fer);
    }
    if (x_ser) {
        if (x_ser->size() != cfg.w_ser.size()) {
            throw Error(ErrorCode::DimensionMismatch, "x_ser vs w_ser");
        }
        out.r_ser = cfg.k_ser * dot(cfg.w_ser, *x_ser);
    }
    out.r_presence = cfg.k_presence * presence;
    out.r_total = out.r_fer + out.r_ser + out.r_presence;
    return out;
}

}  // namespace srf
