#include "srf/merge.hpp"

#include <tuple>

namespace srf {

namespace {

// (t, channel, source) defines the global order; source index breaks the
// tie between identically named channels from different sources.
bool precedes(const PerceptorFrame& a, std::size_t src_a, const PerceptorFrame& b,
              std::size_t src_b) {
    return std::tie(a.t_ms, a.channel, src_a) < std::tie(b.t_ms, b.channel, src_b);
}

}  // namespace

std::vector<PerceptorFrame> merge_streams(
    const std::vector<std::vector<PerceptorFrame>>& sources) {
    std::vector<std::size_t> cursor(sources.size(), 0);
    std::vector<PerceptorFrame> out;
    std::size_t total = 0;
    for (const auto& s : sources) total += s.size();
    out.reserve(total);

    while (out.size() < total) {
        std::size_t best = sources.size();
        for (std::size_t i = 0; i < sources.size(); ++i) {
            if (cursor[i] >= sources[i].size()) continue;
            if (best == sources.size() ||
                precedes(sources[i][cursor[i]], i, sources[best][cursor[best]], best)) {
                best = i;
            }
        }
        out.push_back(sources[best][cursor[best]++]);
    }
    return out;
}

StreamMerger::StreamMerger(std::size_t n_sources) : sources_(n_sources) {}

void StreamMerger::push(std::size_t source, PerceptorFrame frame) {
    {
        std::lock_guard lock(mutex_);
        sources_[source].queue.push_back(std::move(frame));
    }
    cv_.notify_all();
}

void StreamMerger::close(std::size_t source) {
    {
        std::lock_guard lock(mutex_);
        sources_[source].closed = true;
    }
    cv_.notify_all();
}

std::optional<PerceptorFrame> StreamMerger::pop() {
    std::unique_lock lock(mutex_);
    // A frame is deliverable only when every open source has a head frame;
    // per-source monotone timestamps then make the minimum head globally next.
    cv_.wait(lock, [&] {
        for (const Source& s : sources_) {
            if (s.queue.empty() && !s.closed) return false;
        }
        return true;
    });

    std::size_t best = sources_.size();
    for (std::size_t i = 0; i < sources_.size(); ++i) {
        if (sources_[i].queue.empty()) continue;
        if (best == sources_.size() ||
            precedes(sources_[i].queue.front(), i, sources_[best].queue.front(), best)) {
            best = i;
        }
    }
    if (best == sources_.size()) return std::nullopt;  // all closed and empty
    PerceptorFrame frame = std::move(sources_[best].queue.front());
    sources_[best].queue.pop_front();
    return frame;
}

}  // namespace srf
