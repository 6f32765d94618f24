#pragma once

#include <map>
#include <string>
#include <vector>

#include "srf/taxonomy.hpp"
#include "srf/vector_ops.hpp"

namespace srf {

/// Declares one perceptor channel: its modality, the label order it emits
/// (pre-mapping), and how each of its labels maps into the taxonomy.
/// A label mapped to ChannelSpec::kDrop has its mass discarded before
/// normalization.
struct ChannelSpec {
    static constexpr const char* kDrop = "DROP";

    Modality modality = Modality::FER;
    std::vector<std::string> labels;                 // perceptor's own order; empty for PRESENCE
    std::map<std::string, std::string> label_map;    // overrides; default is identity by name
};

class ChannelRegistry {
public:
    void add(const std::string& channel_id, ChannelSpec spec);

    const ChannelSpec* find(const std::string& channel_id) const;
    const std::map<std::string, ChannelSpec>& channels() const { return channels_; }

    /// A registry whose FER/SER channels all emit taxonomy order directly.
    static ChannelRegistry identity(const Taxonomy& taxonomy,
                                    const std::vector<std::pair<std::string, Modality>>& ids);

private:
    std::map<std::string, ChannelSpec> channels_;
};

}  // namespace srf
