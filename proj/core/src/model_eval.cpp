#include "srf/model_eval.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "srf/error.hpp"
#include "srf/wire.hpp"

namespace srf {

std::vector<PredictionRecord> load_predictions(const std::string& path,
                                               const Taxonomy& taxonomy) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open predictions: " + path);
    std::vector<PredictionRecord> preds;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream is(line);
        std::string sample, actor, label, scores;
        if (!std::getline(is, sample, '|') || !std::getline(is, actor, '|') ||
            !std::getline(is, label, '|') || !std::getline(is, scores)) {
            throw Error(ErrorCode::IoError,
                        "bad prediction line " + std::to_string(lineno));
        }
        PredictionRecord rec;
        rec.sample_id = sample;
        rec.actor_id = actor;
        const auto idx = taxonomy.index_of(label);
        if (!idx) {
            throw Error(ErrorCode::IoError, "unknown true label on line " +
                                                std::to_string(lineno) + ": " + label);
        }
        rec.true_index = *idx;
        std::istringstream ss(scores);
        std::string tok;
        double sum = 0.0;
        while (std::getline(ss, tok, ',')) {
            std::size_t pos = 0;
            double v = std::stod(tok, &pos);
            if (pos != tok.size() || !std::isfinite(v) || v < 0.0) {
                throw Error(ErrorCode::IoError, "bad score on line " +
                                                    std::to_string(lineno) + ": " + tok);
            }
            rec.scores.push_back(v);
            sum += v;
        }
        if (rec.scores.size() != taxonomy.size() || sum <= 0.0) {
            throw Error(ErrorCode::IoError,
                        "bad score vector on line " + std::to_string(lineno));
        }
        preds.push_back(std::move(rec));
    }
    return preds;
}

std::vector<std::vector<double>> confusion_matrix(
    const std::vector<PredictionRecord>& preds, const Taxonomy& taxonomy,
    ConfusionNormalize normalize) {
    const std::size_t k = taxonomy.size();
    std::vector<std::vector<double>> m(k, std::vector<double>(k, 0.0));
    for (const PredictionRecord& p : preds) {
        m[p.true_index][argmax_index(p.scores)] += 1.0;
    }
    if (normalize == ConfusionNormalize::Row) {
        for (auto& row : m) {
            const double support = std::accumulate(row.begin(), row.end(), 0.0);
            if (support > 0.0) {
                for (double& x : row) x /= support;
            }
        }
    }
    return m;
}

std::vector<std::pair<std::size_t, double>> top_k_accuracy(
    const std::vector<PredictionRecord>& preds, const Taxonomy& taxonomy,
    std::size_t k_max) {
    if (preds.empty()) {
        throw Error(ErrorCode::EmptyPredictions, "no predictions");
    }
    if (k_max < 1 || k_max > taxonomy.size()) {
        throw Error(ErrorCode::InvalidSpec,
                    "k_max must be in [1, " + std::to_string(taxonomy.size()) + "]");
    }
    // hits[k-1]: samples whose true label ranks within the top k.
    std::vector<std::size_t> hits(k_max, 0);
    std::vector<std::size_t> order(taxonomy.size());
    for (const PredictionRecord& p : preds) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return p.scores[a] > p.scores[b];  // stable: ties keep lowest index first
        });
        const auto rank = static_cast<std::size_t>(
            std::find(order.begin(), order.end(), p.true_index) - order.begin());
        for (std::size_t k = rank; k < k_max; ++k) ++hits[k];
    }
    std::vector<std::pair<std::size_t, double>> out;
    for (std::size_t k = 1; k <= k_max; ++k) {
        out.emplace_back(k, static_cast<double>(hits[k - 1]) /
                                static_cast<double>(preds.size()));
    }
    return out;
}

ActorSplit split_by_actor(const std::vector<PredictionRecord>& preds,
                          double test_fraction, std::uint64_t seed) {
    if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
        throw Error(ErrorCode::InvalidSpec, "test_fraction must be in (0, 1)");
    }
    std::map<std::string, std::size_t> counts;
    for (const PredictionRecord& p : preds) ++counts[p.actor_id];
    if (counts.size() < 2) {
        throw Error(ErrorCode::TooFewActors,
                    "need >= 2 distinct actors, have " + std::to_string(counts.size()));
    }

    // Sorted, then Fisher-Yates with explicit draws so the permutation is
    // identical on every platform for a given seed.
    std::vector<std::string> actors;
    for (const auto& [actor, n] : counts) actors.push_back(actor);
    std::mt19937_64 rng(seed);
    for (std::size_t i = actors.size() - 1; i > 0; --i) {
        std::swap(actors[i], actors[rng() % (i + 1)]);
    }

    const auto target = static_cast<double>(preds.size()) * test_fraction;
    std::vector<std::string> test_actors;
    std::size_t test_samples = 0;
    for (const std::string& actor : actors) {
        if (static_cast<double>(test_samples) >= target) break;
        test_actors.push_back(actor);
        test_samples += counts[actor];
    }
    ActorSplit split;
    split.test_actors = test_actors;
    const std::vector<std::string>& ta = split.test_actors;
    for (const PredictionRecord& p : preds) {
        if (std::find(ta.begin(), ta.end(), p.actor_id) != ta.end()) {
            split.test.push_back(p);
        } else {
            split.train.push_back(p);
        }
    }
    return split;
}

std::string render_confusion(const std::vector<std::vector<double>>& matrix,
                             const Taxonomy& taxonomy, ConfusionNormalize normalize) {
    std::ostringstream os;
    os << (normalize == ConfusionNormalize::Row ? "# confusion_matrix_row_normalized\n"
                                                : "# confusion_matrix_counts\n");
    os << "true\\pred";
    for (const std::string& l : taxonomy.labels()) os << '\t' << l;
    os << '\n';
    for (std::size_t i = 0; i < matrix.size(); ++i) {
        os << taxonomy.label(i);
        for (double x : matrix[i]) os << '\t' << format_double(x);
        os << '\n';
    }
    return os.str();
}

std::string render_top_k(const std::vector<std::pair<std::size_t, double>>& accuracies) {
    std::ostringstream os;
    os << "# top_k_accuracy\n";
    os << "k\taccuracy\n";
    for (const auto& [k, acc] : accuracies) os << k << '\t' << format_double(acc) << '\n';
    return os.str();
}

}  // namespace srf
