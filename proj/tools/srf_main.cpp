#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "srf/clip_eval.hpp"
#include "srf/engine.hpp"
#include "srf/error.hpp"
#include "srf/log.hpp"
#include "srf/model_eval.hpp"
#include "srf/population.hpp"
#include "srf/run_config.hpp"
#include "srf/synth.hpp"
#include "srf/tcp_ingest.hpp"
#include "srf/trace_io.hpp"
#include "srf/wire.hpp"

namespace {

using namespace srf;

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case ErrorCode::ConfigError:
        case ErrorCode::InvalidSpec:
            return 2;
        default:
            return 1;
    }
}

std::unique_ptr<std::ofstream> open_out(const std::string& path, std::ostream*& out) {
    if (path.empty()) {
        out = &std::cout;
        return nullptr;
    }
    auto file = std::make_unique<std::ofstream>(path);
    if (!*file) throw Error(ErrorCode::IoError, "cannot open output: " + path);
    out = file.get();
    return file;
}

void emit_text(const std::string& text, const std::string& out_path) {
    std::ostream* out = nullptr;
    auto file = open_out(out_path, out);
    *out << text;
}

/// Streams frames through an engine exactly the way run() does, writing
/// samples as ticks fire. Live and replay paths share this.
class StreamDriver {
public:
    StreamDriver(Engine engine, std::ostream& out)
        : engine_(std::move(engine)), out_(out) {}

    void feed(const PerceptorFrame& frame) {
        emit(engine_.advance(frame.t_ms - 1));
        engine_.ingest(frame);
        last_t_ = frame.t_ms;
    }

    std::size_t finish() {
        if (last_t_) emit(engine_.advance(*last_t_));
        return emitted_;
    }

private:
    void emit(const std::vector<RewardSample>& samples) {
        for (const RewardSample& s : samples) out_ << format_sample(s) << '\n';
        emitted_ += samples.size();
    }

    Engine engine_;
    std::ostream& out_;
    std::optional<std::int64_t> last_t_;
    std::size_t emitted_ = 0;
};

int cmd_synth(const std::string& spec_path, std::uint64_t seed,
              const std::string& out_path) {
    const SynthSpec spec = load_synth_spec(spec_path);
    const auto frames = synth_trace(spec, seed);
    std::ostream* out = nullptr;
    auto file = open_out(out_path, out);
    for (const PerceptorFrame& f : frames) *out << format_frame(f) << '\n';
    log_info("synth: " + std::to_string(frames.size()) + " frames");
    return 0;
}

int cmd_replay(const std::string& config_path, const std::string& trace_path,
               const std::string& out_path) {
    const RunConfig cfg = load_run_config(config_path);
    FrameParser parser(cfg.taxonomy, cfg.registry);
    const TraceReadResult trace = read_trace_file(trace_path, parser);
    for (const std::string& d : trace.diagnostics) log_warn(d);

    std::ostream* out = nullptr;
    auto file = open_out(out_path, out);
    StreamDriver driver(Engine(cfg.taxonomy, cfg.fusion), *out);
    for (const PerceptorFrame& f : trace.frames) driver.feed(f);
    const std::size_t n = driver.finish();
    log_info("replay: " + std::to_string(n) + " samples");
    return 0;
}

int cmd_run(const std::string& config_path, const std::string& listen,
            const std::string& out_path) {
    const RunConfig cfg = load_run_config(config_path);
    std::ostream* out = nullptr;
    auto file = open_out(out_path, out);
    StreamDriver driver(Engine(cfg.taxonomy, cfg.fusion), *out);

    if (!listen.empty()) {
        const auto colon = listen.rfind(':');
        if (colon == std::string::npos) {
            throw Error(ErrorCode::ConfigError, "--listen expects addr:port");
        }
        const std::string host = listen.substr(0, colon);
        const int port = std::stoi(listen.substr(colon + 1));
        TcpIngest ingest(host, static_cast<std::uint16_t>(port),
                         cfg.registry.channels().size(), cfg.taxonomy, cfg.registry);
        log_info("listening on " + host + ":" + std::to_string(ingest.port()) + " for " +
                 std::to_string(cfg.registry.channels().size()) + " channels");
        while (auto frame = ingest.next()) driver.feed(*frame);
    } else {
        FrameParser parser(cfg.taxonomy, cfg.registry);
        std::string line;
        while (std::getline(std::cin, line)) {
            if (line.empty()) continue;
            ParseResult parsed = parser.parse(line);
            if (auto* frame = std::get_if<PerceptorFrame>(&parsed)) {
                driver.feed(*frame);
            } else {
                const auto& d = std::get<FrameDiagnostic>(parsed);
                log_warn(std::string(to_string(d.kind)) + ": " + d.detail);
            }
        }
    }
    const std::size_t n = driver.finish();
    log_info("run: " + std::to_string(n) + " samples");
    return 0;
}

int cmd_eval_clips(const std::string& config_path, const std::string& manifest_path,
                   std::optional<std::size_t> bins, const std::string& out_path) {
    const RunConfig cfg = load_run_config(config_path);
    const auto clips = load_clip_manifest(manifest_path);
    ClipEvalOptions options;
    options.histogram_bins = bins.value_or(cfg.histogram_bins);
    const ClipReport report =
        evaluate_clips(clips, cfg.fusion, cfg.taxonomy, cfg.registry, options);
    emit_text(render_clip_report(report), out_path);
    return 0;
}

Taxonomy taxonomy_from(const std::string& config_path) {
    return config_path.empty() ? Taxonomy::default7()
                               : load_run_config(config_path).taxonomy;
}

int cmd_eval_model(const std::string& config_path, const std::string& predictions_path,
                   std::size_t top_k, const std::string& out_path) {
    const Taxonomy taxonomy = taxonomy_from(config_path);
    const auto preds = load_predictions(predictions_path, taxonomy);
    if (top_k == 0 || top_k > taxonomy.size()) top_k = taxonomy.size();

    std::string text;
    text += render_confusion(confusion_matrix(preds, taxonomy, ConfusionNormalize::Counts),
                             taxonomy, ConfusionNormalize::Counts);
    text += '\n';
    text += render_confusion(confusion_matrix(preds, taxonomy, ConfusionNormalize::Row),
                             taxonomy, ConfusionNormalize::Row);
    text += '\n';
    text += render_top_k(top_k_accuracy(preds, taxonomy, top_k));
    emit_text(text, out_path);
    return 0;
}

int cmd_split_actors(const std::string& config_path, const std::string& predictions_path,
                     double fraction, std::uint64_t seed, const std::string& out_path) {
    const Taxonomy taxonomy = taxonomy_from(config_path);
    const auto preds = load_predictions(predictions_path, taxonomy);
    const ActorSplit split = split_by_actor(preds, fraction, seed);

    std::ostream* out = nullptr;
    auto file = open_out(out_path, out);
    *out << "# actor_split\n";
    *out << "actor_id\tside\n";
    for (const std::string& actor : split.test_actors) *out << actor << "\ttest\n";
    std::vector<std::string> train_actors;
    for (const PredictionRecord& p : split.train) {
        if (std::find(train_actors.begin(), train_actors.end(), p.actor_id) ==
            train_actors.end()) {
            train_actors.push_back(p.actor_id);
        }
    }
    std::sort(train_actors.begin(), train_actors.end());
    for (const std::string& actor : train_actors) *out << actor << "\ttrain\n";
    *out << "train_samples\t" << split.train.size() << '\n';
    *out << "test_samples\t" << split.test.size() << '\n';
    return 0;
}

int cmd_population(const std::string& manifest_path, const std::string& fn_name,
                   double scale, const std::string& out_path) {
    InternalisationFn f;
    if (fn_name == "identity") {
        f = InternalisationFn::identity();
    } else if (fn_name == "soft_equity") {
        f = InternalisationFn::soft_equity(scale);
    } else {
        throw Error(ErrorCode::ConfigError, "unknown internalisation fn: " + fn_name);
    }
    const auto returns = load_population_manifest(manifest_path);
    emit_text(render_population_report(returns, f), out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"social reward fusion engine and evaluation harness"};
    app.require_subcommand(1);

    std::string config, trace, spec, manifest, predictions, listen, out, fn = "identity";
    std::uint64_t seed = 0;
    std::size_t bins = 0;
    std::size_t top_k = 0;
    double fraction = 0.25;
    double scale = 1.0;

    auto* c_run = app.add_subcommand("run", "fuse live frames into rewards");
    c_run->add_option("--config", config, "run configuration file")->required();
    c_run->add_option("--listen", listen, "TCP listen address (addr:port)");
    c_run->add_option("--out", out, "output .srfr path (default stdout)");

    auto* c_replay = app.add_subcommand("replay", "fuse a recorded trace");
    c_replay->add_option("--config", config)->required();
    c_replay->add_option("--trace", trace, "input .srft trace")->required();
    c_replay->add_option("--out", out);

    auto* c_clips = app.add_subcommand("eval-clips", "clip correlation report");
    c_clips->add_option("--config", config)->required();
    c_clips->add_option("--manifest", manifest, "clip manifest")->required();
    c_clips->add_option("--bins", bins, "histogram bin count");
    c_clips->add_option("--out", out);

    auto* c_model = app.add_subcommand("eval-model", "confusion and top-k report");
    c_model->add_option("--config", config);
    c_model->add_option("--predictions", predictions)->required();
    c_model->add_option("--topk", top_k, "max k (default taxonomy size)");
    c_model->add_option("--out", out);

    auto* c_split = app.add_subcommand("split-actors", "actor-disjoint split");
    c_split->add_option("--config", config);
    c_split->add_option("--predictions", predictions)->required();
    c_split->add_option("--fraction", fraction, "test fraction")->required();
    c_split->add_option("--seed", seed);
    c_split->add_option("--out", out);

    auto* c_pop = app.add_subcommand("population", "internalised population return");
    c_pop->add_option("--manifest", manifest, "individual_id|path manifest")->required();
    c_pop->add_option("--fn", fn, "identity|soft_equity");
    c_pop->add_option("--scale", scale, "soft_equity scale a");
    c_pop->add_option("--out", out);

    auto* c_synth = app.add_subcommand("synth", "generate a synthetic trace");
    c_synth->add_option("--spec", spec, "JSON synth script")->required();
    c_synth->add_option("--seed", seed);
    c_synth->add_option("--out", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(c_run)) return cmd_run(config, listen, out);
        if (app.got_subcommand(c_replay)) return cmd_replay(config, trace, out);
        if (app.got_subcommand(c_clips)) {
            return cmd_eval_clips(config, manifest,
                                  c_clips->count("--bins") ? std::optional(bins)
                                                           : std::nullopt,
                                  out);
        }
        if (app.got_subcommand(c_model)) {
            return cmd_eval_model(config, predictions, top_k, out);
        }
        if (app.got_subcommand(c_split)) {
            return cmd_split_actors(config, predictions, fraction, seed, out);
        }
        if (app.got_subcommand(c_pop)) return cmd_population(manifest, fn, scale, out);
        if (app.got_subcommand(c_synth)) return cmd_synth(spec, seed, out);
    } catch (const srf::Error& e) {
        srf::log_error(e.what());
        return exit_code_for(e);
    } catch (const std::exception& e) {
        srf::log_error(e.what());
        return 1;
    }
    return 2;
}
