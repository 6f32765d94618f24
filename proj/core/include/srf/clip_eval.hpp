#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "srf/engine.hpp"
#include "srf/registry.hpp"
#include "srf/stats.hpp"
#include "srf/taxonomy.hpp"

namespace srf {

/// One labeled 10-second clip. label is the ordinal annotation in
/// {-2,-1,0,+1,+2}; nullopt means n/a, which excludes the clip from all
/// statistics.
struct ClipRecord {
    std::string clip_id;
    std::string trace_path;
    std::optional<int> label;
};

/// Per-clip arithmetic means of the reward stream and its decomposition.
struct ClipMeans {
    std::size_t ticks = 0;
    double total = 0.0;
    double fer = 0.0;
    double ser = 0.0;
    double presence = 0.0;
};

/// Throws EmptyClip when the stream has no samples.
ClipMeans clip_mean_reward(const std::vector<RewardSample>& samples);

struct ClipEvalOptions {
    std::size_t histogram_bins = 20;
};

struct ClipReport {
    struct PerClip {
        std::string clip_id;
        int label = 0;
        ClipMeans means;
    };

    std::vector<PerClip> clips;  // non-NA clips, sorted by clip_id
    double pearson_total = 0.0;
    std::optional<double> pearson_fer;       // absent when that component is constant
    std::optional<double> pearson_ser;
    std::optional<double> pearson_presence;
    std::map<int, DescriptiveStats> stats_by_label;
    double hist_lo = 0.0;
    double hist_hi = 0.0;
    std::vector<std::size_t> hist_counts;
    std::vector<std::string> diagnostics;    // skipped clips and parse problems
};

/// Manifest lines: <clip_id>|<trace_path>|<label>, label in
/// {-2,-1,0,+1,+2,na}. Relative trace paths resolve against the manifest's
/// directory.
std::vector<ClipRecord> load_clip_manifest(const std::string& path);

/// Runs every clip trace through fusion, computes clip means, and
/// correlates them against the numeric labels. Requires >= 2 non-NA clips
/// with >= 2 distinct labels; throws ZeroVariance otherwise.
ClipReport evaluate_clips(const std::vector<ClipRecord>& clips, const FusionConfig& cfg,
                          const Taxonomy& taxonomy, const ChannelRegistry& registry,
                          const ClipEvalOptions& options = {});

/// Tab-separated tables: correlation by modality, descriptive stats by
/// label, histogram bin counts, per-clip means.
std::string render_clip_report(const ClipReport& report);

}  // namespace srf
