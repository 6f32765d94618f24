#include "srf/run_config.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "srf/error.hpp"
#include "srf/vector_ops.hpp"

namespace srf {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) out.push_back(trim(tok));
    return out;
}

using Section = std::map<std::string, std::string>;

std::map<std::string, Section> parse_ini(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ConfigError, "cannot open config: " + path);
    std::map<std::string, Section> sections;
    std::string section;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        if (t.front() == '[' && t.back() == ']') {
            section = trim(t.substr(1, t.size() - 2));
            if (section.empty()) {
                throw Error(ErrorCode::ConfigError,
                            "empty section name at line " + std::to_string(lineno));
            }
            sections[section];
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos || section.empty()) {
            throw Error(ErrorCode::ConfigError,
                        "bad config line " + std::to_string(lineno) + ": " + t);
        }
        const std::string key = trim(t.substr(0, eq));
        if (!sections[section].emplace(key, trim(t.substr(eq + 1))).second) {
            throw Error(ErrorCode::ConfigError, "duplicate key: " + section + "." + key);
        }
    }
    return sections;
}

class SectionReader {
public:
    SectionReader(const std::string& name, const Section& section)
        : name_(name), section_(section) {}

    ~SectionReader() = default;

    bool has(const std::string& key) {
        seen_.insert(key);
        return section_.count(key) > 0;
    }
    std::string str(const std::string& key) {
        seen_.insert(key);
        auto it = section_.find(key);
        if (it == section_.end()) {
            throw Error(ErrorCode::ConfigError, "missing key: " + name_ + "." + key);
        }
        return it->second;
    }
    std::string str_or(const std::string& key, const std::string& fallback) {
        return has(key) ? str(key) : fallback;
    }
    double num(const std::string& key, double fallback) {
        if (!has(key)) return fallback;
        const std::string v = str(key);
        std::size_t pos = 0;
        double out;
        try {
            out = std::stod(v, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != v.size() || !std::isfinite(out)) {
            throw Error(ErrorCode::ConfigError, "bad number for " + name_ + "." + key);
        }
        return out;
    }
    bool flag(const std::string& key, bool fallback) {
        if (!has(key)) return fallback;
        const std::string v = str(key);
        if (v == "true" || v == "1") return true;
        if (v == "false" || v == "0") return false;
        throw Error(ErrorCode::ConfigError, "bad boolean for " + name_ + "." + key);
    }

    void reject_unknown() const {
        for (const auto& [key, value] : section_) {
            if (!seen_.count(key)) {
                throw Error(ErrorCode::ConfigError, "unknown key: " + name_ + "." + key);
            }
        }
    }

private:
    std::string name_;
    const Section& section_;
    std::set<std::string> seen_;
};

EmotionVector parse_weights(const std::string& value, const Taxonomy& taxonomy,
                            bool normalize, const std::string& key) {
    EmotionVector w(taxonomy.size(), 0.0);
    for (const std::string& entry : split_list(value)) {
        const auto colon = entry.find(':');
        if (colon == std::string::npos) {
            throw Error(ErrorCode::ConfigError, key + ": expected label:weight, got " + entry);
        }
        const std::string label = trim(entry.substr(0, colon));
        const auto idx = taxonomy.index_of(label);
        if (!idx) {
            throw Error(ErrorCode::ConfigError, key + ": unknown label " + label);
        }
        const std::string num = trim(entry.substr(colon + 1));
        std::size_t pos = 0;
        double v;
        try {
            v = std::stod(num, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != num.size() || !std::isfinite(v)) {
            throw Error(ErrorCode::ConfigError, key + ": bad weight " + num);
        }
        w[*idx] = v;
    }
    if (normalize) {
        const double n = l2_norm(w);
        if (n == 0.0) throw Error(ErrorCode::ConfigError, key + ": zero weight vector");
        for (double& x : w) x /= n;
    }
    return w;
}

}  // namespace

RunConfig load_run_config(const std::string& path) {
    const auto sections = parse_ini(path);
    RunConfig cfg;

    if (auto it = sections.find("taxonomy"); it != sections.end()) {
        SectionReader r("taxonomy", it->second);
        cfg.taxonomy = Taxonomy(split_list(r.str("labels")));
        r.reject_unknown();
    }
    cfg.fusion = FusionConfig::defaults(cfg.taxonomy);

    if (auto it = sections.find("fusion"); it != sections.end()) {
        SectionReader r("fusion", it->second);
        cfg.fusion.k_fer = r.num("k_fer", cfg.fusion.k_fer);
        cfg.fusion.k_ser = r.num("k_ser", cfg.fusion.k_ser);
        cfg.fusion.k_presence = r.num("k_presence", cfg.fusion.k_presence);
        cfg.fusion.tick_period_ms =
            static_cast<std::int64_t>(r.num("tick_period_ms", 100));
        cfg.fusion.fer_window_ms = static_cast<std::int64_t>(r.num("fer_window_ms", 500));
        cfg.fusion.ser_window_ms = static_cast<std::int64_t>(r.num("ser_window_ms", 2000));
        cfg.fusion.presence_window_ms =
            static_cast<std::int64_t>(r.num("presence_window_ms", 1000));
        if (r.has("w_fer")) {
            cfg.fusion.w_fer = parse_weights(r.str("w_fer"), cfg.taxonomy,
                                            r.flag("w_fer_normalize", false), "w_fer");
        } else {
            r.flag("w_fer_normalize", false);
        }
        if (r.has("w_ser")) {
            cfg.fusion.w_ser = parse_weights(r.str("w_ser"), cfg.taxonomy,
                                            r.flag("w_ser_normalize", false), "w_ser");
        } else {
            r.flag("w_ser_normalize", false);
        }
        const std::string policy =
            r.str_or("missing_modality_policy", "zero_contribution");
        if (policy != "zero_contribution") {
            throw Error(ErrorCode::ConfigError,
                        "unknown missing_modality_policy: " + policy);
        }
        r.reject_unknown();
    }

    if (auto it = sections.find("eval"); it != sections.end()) {
        SectionReader r("eval", it->second);
        const double bins = r.num("histogram_bins", 20);
        if (bins < 1 || bins != std::floor(bins)) {
            throw Error(ErrorCode::ConfigError, "eval.histogram_bins must be a positive integer");
        }
        cfg.histogram_bins = static_cast<std::size_t>(bins);
        cfg.test_fraction = r.num("test_fraction", 0.25);
        cfg.seed = static_cast<std::uint64_t>(r.num("seed", 0));
        r.reject_unknown();
    }

    for (const auto& [name, section] : sections) {
        if (name == "taxonomy" || name == "fusion" || name == "eval") continue;
        if (name.rfind("channel:", 0) != 0) {
            throw Error(ErrorCode::ConfigError, "unknown section: [" + name + "]");
        }
        const std::string channel_id = name.substr(8);
        SectionReader r(name, section);
        ChannelSpec spec;
        const auto modality = modality_from_string(r.str("modality"));
        if (!modality) {
            throw Error(ErrorCode::ConfigError, name + ": bad modality");
        }
        spec.modality = *modality;
        if (spec.modality != Modality::PRESENCE) {
            spec.labels =
                r.has("labels") ? split_list(r.str("labels")) : cfg.taxonomy.labels();
            if (r.has("map")) {
                for (const std::string& entry : split_list(r.str("map"))) {
                    const auto colon = entry.find(':');
                    if (colon == std::string::npos) {
                        throw Error(ErrorCode::ConfigError,
                                    name + ": map entries are src:target");
                    }
                    spec.label_map[trim(entry.substr(0, colon))] =
                        trim(entry.substr(colon + 1));
                }
            }
            // Every declared label must resolve to a taxonomy label or DROP.
            for (const std::string& src : spec.labels) {
                auto mapped = spec.label_map.find(src);
                const std::string& target =
                    mapped != spec.label_map.end() ? mapped->second : src;
                if (target != ChannelSpec::kDrop && !cfg.taxonomy.contains(target)) {
                    throw Error(ErrorCode::ConfigError,
                                name + ": label " + src + " -> " + target +
                                    " not in taxonomy");
                }
            }
        } else {
            r.has("labels");
            r.has("map");
        }
        r.reject_unknown();
        cfg.registry.add(channel_id, std::move(spec));
    }

    cfg.fusion.validate(cfg.taxonomy);
    if (!(cfg.test_fraction > 0.0 && cfg.test_fraction < 1.0)) {
        throw Error(ErrorCode::ConfigError, "eval.test_fraction must be in (0, 1)");
    }
    return cfg;
}

}  // namespace srf
