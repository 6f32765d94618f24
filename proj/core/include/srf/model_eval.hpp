#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "srf/taxonomy.hpp"
#include "srf/vector_ops.hpp"

namespace srf {

/// One labeled classifier output for model evaluation.
struct PredictionRecord {
    std::string sample_id;
    std::string actor_id;
    std::size_t true_index = 0;  // taxonomy index of the true label
    EmotionVector scores;        // raw vector, taxonomy order
};

/// Prediction file lines: <sample_id>|<actor_id>|<true_label>|<s1,...,sk>.
std::vector<PredictionRecord> load_predictions(const std::string& path,
                                               const Taxonomy& taxonomy);

enum class ConfusionNormalize { Counts, Row };

/// entry[i][j]: true class i predicted (argmax) class j. Row normalization
/// divides by row support; zero-support rows stay all-zero.
std::vector<std::vector<double>> confusion_matrix(
    const std::vector<PredictionRecord>& preds, const Taxonomy& taxonomy,
    ConfusionNormalize normalize);

/// accuracy(k) for k = 1..k_max: fraction of samples whose true label is
/// among the k highest scores. Ranking ties break toward the lowest
/// taxonomy index.
std::vector<std::pair<std::size_t, double>> top_k_accuracy(
    const std::vector<PredictionRecord>& preds, const Taxonomy& taxonomy,
    std::size_t k_max);

struct ActorSplit {
    std::vector<PredictionRecord> train;
    std::vector<PredictionRecord> test;
    std::vector<std::string> test_actors;  // in shuffled assignment order
};

/// Deterministic actor-disjoint split: actors are sorted, shuffled by
/// seed, and the smallest actor prefix whose sample count reaches
/// test_fraction * total becomes the test side.
ActorSplit split_by_actor(const std::vector<PredictionRecord>& preds,
                          double test_fraction, std::uint64_t seed);

std::string render_confusion(const std::vector<std::vector<double>>& matrix,
                             const Taxonomy& taxonomy, ConfusionNormalize normalize);
std::string render_top_k(const std::vector<std::pair<std::size_t, double>>& accuracies);

}  // namespace srf
