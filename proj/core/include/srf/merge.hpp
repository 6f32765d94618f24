#pragma once

#include <condition_variable>
#include <cstddef>
#include <deque>
#include <mutex>
#include <optional>
#include <vector>

#include "srf/frame.hpp"

namespace srf {

/// Merge per-source ordered frame lists into one globally ordered list.
/// Order key is (t, channel id, source index); output is a deterministic
/// function of the source contents.
std::vector<PerceptorFrame> merge_streams(
    const std::vector<std::vector<PerceptorFrame>>& sources);

/// Incremental k-way merge over concurrently fed sources. Producers push
/// frames (non-decreasing t per source); the single consumer pops the
/// globally next frame, blocking until every open source can commit to it.
/// Produces the same order as merge_streams regardless of arrival timing.
class StreamMerger {
public:
    explicit StreamMerger(std::size_t n_sources);

    void push(std::size_t source, PerceptorFrame frame);
    void close(std::size_t source);

    /// Blocks until a frame is deliverable; nullopt once all sources are
    /// closed and drained.
    std::optional<PerceptorFrame> pop();

private:
    struct Source {
        std::deque<PerceptorFrame> queue;
        bool closed = false;
    };

    std::mutex mutex_;
    std::condition_variable cv_;
    std::vector<Source> sources_;
};

}  // namespace srf
