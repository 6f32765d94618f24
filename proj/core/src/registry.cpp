#include "srf/registry.hpp"

#include "srf/error.hpp"

namespace srf {

void ChannelRegistry::add(const std::string& channel_id, ChannelSpec spec) {
    if (channel_id.empty()) {
        throw Error(ErrorCode::ConfigError, "empty channel id");
    }
    if (spec.modality != Modality::PRESENCE && spec.labels.empty()) {
        throw Error(ErrorCode::ConfigError,
                    "channel " + channel_id + " declares no labels");
    }
    if (!channels_.emplace(channel_id, std::move(spec)).second) {
        throw Error(ErrorCode::ConfigError, "duplicate channel id: " + channel_id);
    }
}

const ChannelSpec* ChannelRegistry::find(const std::string& channel_id) const {
    auto it = channels_.find(channel_id);
    return it == channels_.end() ? nullptr : &it->second;
}

ChannelRegistry ChannelRegistry::identity(
    const Taxonomy& taxonomy, const std::vector<std::pair<std::string, Modality>>& ids) {
    ChannelRegistry reg;
    for (const auto& [id, modality] : ids) {
        ChannelSpec spec;
        spec.modality = modality;
        if (modality != Modality::PRESENCE) spec.labels = taxonomy.labels();
        reg.add(id, std::move(spec));
    }
    return reg;
}

}  // namespace srf
