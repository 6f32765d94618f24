#pragma once

#include <map>
#include <string>
#include <variant>

#include "srf/frame.hpp"
#include "srf/registry.hpp"
#include "srf/reward.hpp"
#include "srf/taxonomy.hpp"

namespace srf {

/// Wire format, one frame per line:
///   <t_ms>|<channel>|<FER|SER|PRESENCE>|<payload>
/// FER/SER payload: comma-separated decimal reals in the channel's declared
/// label order. PRESENCE payload: `faces=<uint>` and/or `voice=<0|1>`.

enum class FrameErrorKind {
    MalformedLine,
    UnknownChannel,
    UnknownLabel,
    NonMonotonicTimestamp,
    BadVector,
};

const char* to_string(FrameErrorKind kind);

struct FrameDiagnostic {
    FrameErrorKind kind;
    std::string detail;
};

using ParseResult = std::variant<PerceptorFrame, FrameDiagnostic>;

/// Stateful line parser: applies the channel's label mapping and enforces
/// per-channel timestamp monotonicity. Invalid lines yield exactly one
/// diagnostic and no frame; the parser never throws on line content.
class FrameParser {
public:
    FrameParser(const Taxonomy& taxonomy, const ChannelRegistry& registry)
        : taxonomy_(&taxonomy), registry_(&registry) {}

    ParseResult parse(const std::string& line);

private:
    const Taxonomy* taxonomy_;
    const ChannelRegistry* registry_;
    std::map<std::string, std::int64_t> last_t_;
};

/// Canonical form of a frame: taxonomy-order values, shortest round-trip
/// decimals, `faces` before `voice`.
std::string format_frame(const PerceptorFrame& frame);

/// Shortest decimal that round-trips to the same double.
std::string format_double(double value);

/// Output record of the fusion engine (`.srfr`), one sample per line:
///   <tick_ms>|<r_total>|<r_fer>|<r_ser>|<r_presence>|<presence_fraction>
std::string format_sample(const RewardSample& sample);
RewardSample parse_sample(const std::string& line);  // throws IoError on bad lines

}  // namespace srf
