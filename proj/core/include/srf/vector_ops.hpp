#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace srf {

/// k real values indexed by the run's taxonomy. A raw vector is a
/// probability-like perceptor estimate (nonnegative, positive sum); a
/// normalized vector has unit L2 norm.
using EmotionVector = std::vector<double>;

enum class Modality { FER, SER, PRESENCE };

const char* to_string(Modality m);
std::optional<Modality> modality_from_string(const std::string& s);

/// One modality's worth of per-model normalized estimates at a tick.
struct ModalitySnapshot {
    Modality modality = Modality::FER;
    std::vector<EmotionVector> vectors;   // one normalized vector per model
    std::vector<std::string> model_ids;
};

double l2_norm(const EmotionVector& v);
double dot(const EmotionVector& a, const EmotionVector& b);

/// Scale a raw vector to unit L2 norm. Rejects negative entries,
/// non-finite entries, and the zero vector.
EmotionVector normalize_unit(const EmotionVector& raw);

/// Plain elementwise mean of the snapshot's vectors; absent when the
/// snapshot is empty. The mean is deliberately not re-normalized, so its
/// L2 norm is at most 1.
std::optional<EmotionVector> average_modality(const ModalitySnapshot& snapshot);

std::size_t argmax_index(const EmotionVector& v);  // ties -> lowest index

}  // namespace srf
