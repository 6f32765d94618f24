#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace srf {

/// Ordered set of emotion labels defining the axes of every emotion vector
/// in a run. Label order is fixed at construction and shared by all vectors.
class Taxonomy {
public:
    explicit Taxonomy(std::vector<std::string> labels);

    /// The seven-class default: anger, disgust, fear, happiness, sadness,
    /// surprise, neutral.
    static Taxonomy default7();

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_[i]; }

    std::optional<std::size_t> index_of(const std::string& label) const;
    bool contains(const std::string& label) const { return index_of(label).has_value(); }

    bool operator==(const Taxonomy& other) const { return labels_ == other.labels_; }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace srf
