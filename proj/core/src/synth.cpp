#include "srf/synth.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <tuple>

#include <json.hpp>

#include "srf/error.hpp"

namespace srf {

namespace {

// Uniform in [-1, 1) built from raw engine output; identical across stdlibs.
double uniform_pm1(std::mt19937_64& rng) {
    return (static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0)) * 2.0 - 1.0;
}

void validate(const SynthSpec& spec) {
    if (spec.segments.empty()) {
        throw Error(ErrorCode::InvalidSpec, "no segments");
    }
    for (const SynthSegment& seg : spec.segments) {
        if (seg.duration_ms <= 0) {
            throw Error(ErrorCode::InvalidSpec, "segment duration must be > 0");
        }
        for (const SynthChannelScript& ch : seg.channels) {
            if (ch.channel.empty()) {
                throw Error(ErrorCode::InvalidSpec, "empty channel id");
            }
            if (!(ch.rate_hz > 0.0)) {
                throw Error(ErrorCode::InvalidSpec,
                            "rate must be > 0 for channel " + ch.channel);
            }
            if (ch.modality != Modality::PRESENCE) {
                double sum = 0.0;
                for (double x : ch.profile) {
                    if (!std::isfinite(x) || x < 0.0) {
                        throw Error(ErrorCode::InvalidSpec,
                                    "profile values must be finite and >= 0: " + ch.channel);
                    }
                    sum += x;
                }
                if (ch.profile.empty() || sum <= 0.0) {
                    throw Error(ErrorCode::InvalidSpec,
                                "profile must have positive sum: " + ch.channel);
                }
            }
            if (ch.noise < 0.0 || !std::isfinite(ch.noise)) {
                throw Error(ErrorCode::InvalidSpec, "noise must be >= 0: " + ch.channel);
            }
        }
    }
}

}  // namespace

std::vector<PerceptorFrame> synth_trace(const SynthSpec& spec, std::uint64_t seed) {
    validate(spec);
    std::mt19937_64 rng(seed);
    std::vector<PerceptorFrame> frames;

    std::int64_t seg_start = 0;
    for (const SynthSegment& seg : spec.segments) {
        for (const SynthChannelScript& ch : seg.channels) {
            const double period_ms = 1000.0 / ch.rate_hz;
            for (std::int64_t i = 0;; ++i) {
                const std::int64_t t =
                    seg_start +
                    static_cast<std::int64_t>(std::floor(static_cast<double>(i) * period_ms));
                if (t >= seg_start + seg.duration_ms) break;
                PerceptorFrame frame;
                frame.t_ms = t;
                frame.channel = ch.channel;
                frame.modality = ch.modality;
                if (ch.modality == Modality::PRESENCE) {
                    frame.face_count = ch.face_count;
                    frame.voice_active = ch.voice_active;
                } else {
                    EmotionVector raw = ch.profile;
                    if (ch.noise > 0.0) {
                        double sum = 0.0;
                        for (double& x : raw) {
                            x = std::max(0.0, x * (1.0 + ch.noise * uniform_pm1(rng)));
                            sum += x;
                        }
                        if (sum <= 0.0) raw = ch.profile;  // perturbation wiped the vector
                    }
                    frame.raw = std::move(raw);
                }
                frames.push_back(std::move(frame));
            }
        }
        seg_start += seg.duration_ms;
    }

    std::stable_sort(frames.begin(), frames.end(),
                     [](const PerceptorFrame& a, const PerceptorFrame& b) {
                         return std::tie(a.t_ms, a.channel) < std::tie(b.t_ms, b.channel);
                     });
    return frames;
}

SynthSpec load_synth_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open synth script: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidSpec, std::string("bad synth script JSON: ") + e.what());
    }

    SynthSpec spec;
    try {
        for (const auto& jseg : j.at("segments")) {
            SynthSegment seg;
            seg.duration_ms = jseg.at("duration_ms").get<std::int64_t>();
            for (const auto& jch : jseg.at("channels")) {
                SynthChannelScript ch;
                ch.channel = jch.at("channel").get<std::string>();
                const auto m = modality_from_string(jch.at("modality").get<std::string>());
                if (!m) {
                    throw Error(ErrorCode::InvalidSpec, "bad modality for " + ch.channel);
                }
                ch.modality = *m;
                ch.rate_hz = jch.at("rate_hz").get<double>();
                if (ch.modality == Modality::PRESENCE) {
                    ch.face_count = jch.value("faces", 0u);
                    ch.voice_active = jch.value("voice", false);
                } else {
                    ch.profile = jch.at("profile").get<EmotionVector>();
                    ch.noise = jch.value("noise", 0.0);
                }
                seg.channels.push_back(std::move(ch));
            }
            spec.segments.push_back(std::move(seg));
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidSpec, std::string("bad synth script: ") + e.what());
    }
    return spec;
}

}  // namespace srf
