#include "srf/wire.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <string_view>
#include <vector>

#include "srf/error.hpp"

namespace srf {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

bool parse_i64(std::string_view s, std::int64_t& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

bool parse_u32(std::string_view s, std::uint32_t& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

bool parse_f64(std::string_view s, double& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

FrameDiagnostic diag(FrameErrorKind kind, std::string detail) {
    return FrameDiagnostic{kind, std::move(detail)};
}

}  // namespace

const char* to_string(FrameErrorKind kind) {
    switch (kind) {
        case FrameErrorKind::MalformedLine: return "MalformedLine";
        case FrameErrorKind::UnknownChannel: return "UnknownChannel";
        case FrameErrorKind::UnknownLabel: return "UnknownLabel";
        case FrameErrorKind::NonMonotonicTimestamp: return "NonMonotonicTimestamp";
        case FrameErrorKind::BadVector: return "BadVector";
    }
    return "?";
}

ParseResult FrameParser::parse(const std::string& line) {
    std::string_view sv = line;
    if (!sv.empty() && sv.back() == '\n') sv.remove_suffix(1);
    if (!sv.empty() && sv.back() == '\r') sv.remove_suffix(1);

    const auto fields = split(sv, '|');
    if (fields.size() != 4) {
        return diag(FrameErrorKind::MalformedLine,
                    "expected 4 pipe-separated fields, got " +
                        std::to_string(fields.size()));
    }

    PerceptorFrame frame;
    if (!parse_i64(fields[0], frame.t_ms)) {
        return diag(FrameErrorKind::MalformedLine, "bad timestamp");
    }
    frame.channel = std::string(fields[1]);
    if (frame.channel.empty()) {
        return diag(FrameErrorKind::MalformedLine, "empty channel id");
    }

    const auto modality = modality_from_string(std::string(fields[2]));
    if (!modality) {
        return diag(FrameErrorKind::MalformedLine,
                    "bad modality: " + std::string(fields[2]));
    }
    frame.modality = *modality;

    const ChannelSpec* spec = registry_->find(frame.channel);
    if (!spec) {
        return diag(FrameErrorKind::UnknownChannel, frame.channel);
    }
    if (spec->modality != frame.modality) {
        return diag(FrameErrorKind::MalformedLine,
                    "channel " + frame.channel + " is " + to_string(spec->modality) +
                        ", frame says " + to_string(frame.modality));
    }

    if (frame.modality == Modality::PRESENCE) {
        bool any = false;
        for (std::string_view tok : split(fields[3], ',')) {
            if (tok.rfind("faces=", 0) == 0) {
                std::uint32_t n;
                if (frame.face_count || !parse_u32(tok.substr(6), n)) {
                    return diag(FrameErrorKind::MalformedLine,
                                "bad presence token: " + std::string(tok));
                }
                frame.face_count = n;
                any = true;
            } else if (tok.rfind("voice=", 0) == 0) {
                std::string_view v = tok.substr(6);
                if (frame.voice_active || (v != "0" && v != "1")) {
                    return diag(FrameErrorKind::MalformedLine,
                                "bad presence token: " + std::string(tok));
                }
                frame.voice_active = (v == "1");
                any = true;
            } else {
                return diag(FrameErrorKind::MalformedLine,
                            "bad presence token: " + std::string(tok));
            }
        }
        if (!any) {
            return diag(FrameErrorKind::MalformedLine, "empty presence payload");
        }
    } else {
        const auto values = split(fields[3], ',');
        if (values.size() != spec->labels.size()) {
            return diag(FrameErrorKind::MalformedLine,
                        "expected " + std::to_string(spec->labels.size()) +
                            " values, got " + std::to_string(values.size()));
        }
        EmotionVector mapped(taxonomy_->size(), 0.0);
        for (std::size_t i = 0; i < values.size(); ++i) {
            double x;
            if (!parse_f64(values[i], x)) {
                return diag(FrameErrorKind::MalformedLine,
                            "bad value: " + std::string(values[i]));
            }
            if (!std::isfinite(x) || x < 0.0) {
                return diag(FrameErrorKind::BadVector,
                            "value out of range: " + std::string(values[i]));
            }
            const std::string& src = spec->labels[i];
            auto it = spec->label_map.find(src);
            const std::string& target = it != spec->label_map.end() ? it->second : src;
            if (target == ChannelSpec::kDrop) continue;
            const auto idx = taxonomy_->index_of(target);
            if (!idx) {
                return diag(FrameErrorKind::UnknownLabel,
                            src + " -> " + target + " not in taxonomy");
            }
            mapped[*idx] += x;
        }
        double sum = 0.0;
        for (double x : mapped) sum += x;
        if (sum == 0.0) {
            return diag(FrameErrorKind::BadVector, "all-zero vector after mapping");
        }
        frame.raw = std::move(mapped);
    }

    auto [it, inserted] = last_t_.try_emplace(frame.channel, frame.t_ms);
    if (!inserted) {
        if (frame.t_ms < it->second) {
            return diag(FrameErrorKind::NonMonotonicTimestamp,
                        frame.channel + ": " + std::to_string(frame.t_ms) + " < " +
                            std::to_string(it->second));
        }
        it->second = frame.t_ms;
    }
    return frame;
}

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

std::string format_frame(const PerceptorFrame& frame) {
    std::ostringstream os;
    os << frame.t_ms << '|' << frame.channel << '|' << to_string(frame.modality) << '|';
    if (frame.modality == Modality::PRESENCE) {
        bool first = true;
        if (frame.face_count) {
            os << "faces=" << *frame.face_count;
            first = false;
        }
        if (frame.voice_active) {
            if (!first) os << ',';
            os << "voice=" << (*frame.voice_active ? '1' : '0');
        }
    } else {
        const EmotionVector& v = frame.raw.value();
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) os << ',';
            os << format_double(v[i]);
        }
    }
    return os.str();
}

std::string format_sample(const RewardSample& sample) {
    std::ostringstream os;
    os << sample.tick_time_ms << '|' << format_double(sample.r_total) << '|'
       << format_double(sample.r_fer) << '|' << format_double(sample.r_ser) << '|'
       << format_double(sample.r_presence) << '|' << format_double(sample.presence);
    return os.str();
}

RewardSample parse_sample(const std::string& line) {
    std::string_view sv = line;
    if (!sv.empty() && sv.back() == '\n') sv.remove_suffix(1);
    if (!sv.empty() && sv.back() == '\r') sv.remove_suffix(1);
    const auto fields = split(sv, '|');
    if (fields.size() != 6) {
        throw Error(ErrorCode::IoError, "bad sample line: " + line);
    }
    RewardSample s;
    if (!parse_i64(fields[0], s.tick_time_ms) || !parse_f64(fields[1], s.r_total) ||
        !parse_f64(fields[2], s.r_fer) || !parse_f64(fields[3], s.r_ser) ||
        !parse_f64(fields[4], s.r_presence) || !parse_f64(fields[5], s.presence)) {
        throw Error(ErrorCode::IoError, "bad sample line: " + line);
    }
    return s;
}

}  // namespace srf
