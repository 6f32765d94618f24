#include "srf/clip_eval.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "srf/error.hpp"
#include "srf/trace_io.hpp"
#include "srf/wire.hpp"

namespace srf {

ClipMeans clip_mean_reward(const std::vector<RewardSample>& samples) {
    if (samples.empty()) {
        throw Error(ErrorCode::EmptyClip, "no reward samples");
    }
    ClipMeans m;
    m.ticks = samples.size();
    for (const RewardSample& s : samples) {
        m.total += s.r_total;
        m.fer += s.r_fer;
        m.ser += s.r_ser;
        m.presence += s.r_presence;
    }
    const double n = static_cast<double>(samples.size());
    m.total /= n;
    m.fer /= n;
    m.ser /= n;
    m.presence /= n;
    return m;
}

std::vector<ClipRecord> load_clip_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open clip manifest: " + path);
    const auto base = std::filesystem::path(path).parent_path();

    std::vector<ClipRecord> clips;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream is(line);
        std::string id, trace, label;
        if (!std::getline(is, id, '|') || !std::getline(is, trace, '|') ||
            !std::getline(is, label)) {
            throw Error(ErrorCode::IoError,
                        "bad manifest line " + std::to_string(lineno) + ": " + line);
        }
        ClipRecord rec;
        rec.clip_id = id;
        std::filesystem::path p(trace);
        rec.trace_path = p.is_absolute() ? p.string() : (base / p).string();
        if (label == "na") {
            rec.label = std::nullopt;
        } else if (label == "-2" || label == "-1" || label == "0" || label == "+1" ||
                   label == "1" || label == "+2" || label == "2") {
            rec.label = std::stoi(label);
        } else {
            throw Error(ErrorCode::IoError,
                        "bad label on manifest line " + std::to_string(lineno) + ": " + label);
        }
        clips.push_back(std::move(rec));
    }
    return clips;
}

namespace {

std::optional<double> try_pearson(const std::vector<double>& x,
                                  const std::vector<double>& y) {
    try {
        return pearson(x, y);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::ZeroVariance) return std::nullopt;
        throw;
    }
}

}  // namespace

ClipReport evaluate_clips(const std::vector<ClipRecord>& clips, const FusionConfig& cfg,
                          const Taxonomy& taxonomy, const ChannelRegistry& registry,
                          const ClipEvalOptions& options) {
    ClipReport report;
    for (const ClipRecord& clip : clips) {
        if (!clip.label) {
            report.diagnostics.push_back(clip.clip_id + ": label n/a, excluded");
            continue;
        }
        try {
            FrameParser parser(taxonomy, registry);
            TraceReadResult trace = read_trace_file(clip.trace_path, parser);
            for (const std::string& d : trace.diagnostics) {
                report.diagnostics.push_back(clip.clip_id + ": " + d);
            }
            const auto samples = run(trace.frames, cfg, taxonomy);
            ClipReport::PerClip pc;
            pc.clip_id = clip.clip_id;
            pc.label = *clip.label;
            pc.means = clip_mean_reward(samples);
            report.clips.push_back(std::move(pc));
        } catch (const Error& e) {
            report.diagnostics.push_back(clip.clip_id + ": excluded: " + e.what());
        }
    }

    std::sort(report.clips.begin(), report.clips.end(),
              [](const auto& a, const auto& b) { return a.clip_id < b.clip_id; });

    if (report.clips.size() < 2) {
        throw Error(ErrorCode::ZeroVariance,
                    "need at least 2 evaluable non-NA clips, have " +
                        std::to_string(report.clips.size()));
    }

    std::vector<double> labels, totals, fers, sers, presences;
    for (const auto& pc : report.clips) {
        labels.push_back(static_cast<double>(pc.label));
        totals.push_back(pc.means.total);
        fers.push_back(pc.means.fer);
        sers.push_back(pc.means.ser);
        presences.push_back(pc.means.presence);
    }

    report.pearson_total = pearson(totals, labels);  // ZeroVariance propagates
    report.pearson_fer = try_pearson(fers, labels);
    report.pearson_ser = try_pearson(sers, labels);
    report.pearson_presence = try_pearson(presences, labels);

    std::map<int, std::vector<double>> grouped;
    for (const auto& pc : report.clips) grouped[pc.label].push_back(pc.means.total);
    for (auto& [label, values] : grouped) {
        report.stats_by_label.emplace(label, DescriptiveStats::of(std::move(values)));
    }

    const double bound =
        std::abs(cfg.k_fer) + std::abs(cfg.k_ser) + std::abs(cfg.k_presence);
    report.hist_lo = -bound;
    report.hist_hi = bound;
    report.hist_counts = histogram(totals, -bound, bound, options.histogram_bins);
    return report;
}

std::string render_clip_report(const ClipReport& report) {
    std::ostringstream os;
    auto opt = [](const std::optional<double>& v) {
        return v ? format_double(*v) : std::string("na");
    };

    os << "# pearson_by_modality\n";
    os << "modality\tr\n";
    os << "total\t" << format_double(report.pearson_total) << '\n';
    os << "fer\t" << opt(report.pearson_fer) << '\n';
    os << "ser\t" << opt(report.pearson_ser) << '\n';
    os << "presence\t" << opt(report.pearson_presence) << '\n';

    os << "\n# descriptive_stats_by_label\n";
    os << "label\tcount\tmean\tstd\tmin\tp25\tmedian\tp75\tmax\n";
    for (const auto& [label, s] : report.stats_by_label) {
        os << label << '\t' << s.count << '\t' << format_double(s.mean) << '\t'
           << format_double(s.std_dev) << '\t' << format_double(s.min) << '\t'
           << format_double(s.p25) << '\t' << format_double(s.median) << '\t'
           << format_double(s.p75) << '\t' << format_double(s.max) << '\n';
    }

    os << "\n# reward_histogram\n";
    os << "bin_lo\tbin_hi\tcount\n";
    const double width =
        (report.hist_hi - report.hist_lo) / static_cast<double>(report.hist_counts.size());
    for (std::size_t i = 0; i < report.hist_counts.size(); ++i) {
        os << format_double(report.hist_lo + width * static_cast<double>(i)) << '\t'
           << format_double(report.hist_lo + width * static_cast<double>(i + 1)) << '\t'
           << report.hist_counts[i] << '\n';
    }

    os << "\n# clip_means\n";
    os << "clip_id\tlabel\tticks\tmean_total\tmean_fer\tmean_ser\tmean_presence\n";
    for (const auto& pc : report.clips) {
        os << pc.clip_id << '\t' << pc.label << '\t' << pc.means.ticks << '\t'
           << format_double(pc.means.total) << '\t' << format_double(pc.means.fer) << '\t'
           << format_double(pc.means.ser) << '\t' << format_double(pc.means.presence)
           << '\n';
    }

    if (!report.diagnostics.empty()) {
        os << "\n# diagnostics\n";
        for (const std::string& d : report.diagnostics) os << d << '\n';
    }
    return os.str();
}

}  // namespace srf
