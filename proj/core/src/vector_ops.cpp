#include "srf/vector_ops.hpp"

#include <cmath>

#include "srf/error.hpp"

namespace srf {

const char* to_string(Modality m) {
    switch (m) {
        case Modality::FER: return "FER";
        case Modality::SER: return "SER";
        case Modality::PRESENCE: return "PRESENCE";
    }
    return "?";
}

std::optional<Modality> modality_from_string(const std::string& s) {
    if (s == "FER") return Modality::FER;
    if (s == "SER") return Modality::SER;
    if (s == "PRESENCE") return Modality::PRESENCE;
    return std::nullopt;
}

double l2_norm(const EmotionVector& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

double dot(const EmotionVector& a, const EmotionVector& b) {
    if (a.size() != b.size()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "dot: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
    }
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

EmotionVector normalize_unit(const EmotionVector& raw) {
    for (double x : raw) {
        if (!std::isfinite(x)) throw Error(ErrorCode::NonFinite, "normalize_unit input");
        if (x < 0.0) throw Error(ErrorCode::Negative, "normalize_unit input");
    }
    const double n = l2_norm(raw);
    if (n == 0.0) throw Error(ErrorCode::ZeroVector, "normalize_unit input");
    EmotionVector out(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) out[i] = raw[i] / n;
    return out;
}

std::optional<EmotionVector> average_modality(const ModalitySnapshot& snapshot) {
    if (snapshot.vectors.empty()) return std::nullopt;
    const std::size_t k = snapshot.vectors.front().size();
    EmotionVector mean(k, 0.0);
    for (const EmotionVector& v : snapshot.vectors) {
        if (v.size() != k) {
            throw Error(ErrorCode::DimensionMismatch, "snapshot vectors disagree on k");
        }
        for (std::size_t i = 0; i < k; ++i) mean[i] += v[i];
    }
    const double inv_n = 1.0 / static_cast<double>(snapshot.vectors.size());
    for (double& x : mean) x *= inv_n;
    return mean;
}

std::size_t argmax_index(const EmotionVector& v) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] > v[best]) best = i;
    }
    return best;
}

}  // namespace srf
