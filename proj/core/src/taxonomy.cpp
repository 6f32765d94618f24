#include "srf/taxonomy.hpp"

#include <algorithm>
#include <cctype>

#include "srf/error.hpp"

namespace srf {

Taxonomy::Taxonomy(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.size() < 2) {
        throw Error(ErrorCode::ConfigError, "taxonomy needs at least 2 labels");
    }
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        const std::string& l = labels_[i];
        if (l.empty()) {
            throw Error(ErrorCode::ConfigError, "empty taxonomy label");
        }
        if (std::any_of(l.begin(), l.end(),
                        [](unsigned char c) { return std::isupper(c) != 0; })) {
            throw Error(ErrorCode::ConfigError, "taxonomy label not lowercase: " + l);
        }
        if (!index_.emplace(l, i).second) {
            throw Error(ErrorCode::ConfigError, "duplicate taxonomy label: " + l);
        }
    }
}

Taxonomy Taxonomy::default7() {
    return Taxonomy({"anger", "disgust", "fear", "happiness", "sadness", "surprise",
                     "neutral"});
}

std::optional<std::size_t> Taxonomy::index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

}  // namespace srf
