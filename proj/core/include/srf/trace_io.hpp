#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "srf/frame.hpp"
#include "srf/reward.hpp"
#include "srf/wire.hpp"

namespace srf {

struct TraceReadResult {
    std::vector<PerceptorFrame> frames;
    std::vector<std::string> diagnostics;  // one entry per rejected line
};

/// Read wire-format lines; invalid lines are collected as diagnostics,
/// never thrown. Blank lines are ignored.
TraceReadResult read_trace(std::istream& in, FrameParser& parser);
TraceReadResult read_trace_file(const std::string& path, FrameParser& parser);

void write_trace_file(const std::string& path,
                      const std::vector<PerceptorFrame>& frames);

void write_samples(std::ostream& out, const std::vector<RewardSample>& samples);
void write_samples_file(const std::string& path,
                        const std::vector<RewardSample>& samples);
std::vector<RewardSample> read_samples_file(const std::string& path);

}  // namespace srf
