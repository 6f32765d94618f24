// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Runs entirely at desk scale with property and oracle checks.

#include <arpa/inet.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <optional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "srf/clip_eval.hpp"
#include "srf/engine.hpp"
#include "srf/error.hpp"
#include "srf/model_eval.hpp"
#include "srf/population.hpp"
#include "srf/run_config.hpp"
#include "srf/synth.hpp"
#include "srf/tcp_ingest.hpp"
#include "srf/trace_io.hpp"
#include "srf/wire.hpp"
#include "support/oracle.hpp"

#ifndef SRF_DATA_DIR
#define SRF_DATA_DIR "data"
#endif

namespace {

using namespace srf;
using Clock = std::chrono::steady_clock;

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name;
    if (!ok && !detail.empty()) std::cout << " -- " << detail;
    std::cout << '\n';
    if (!ok) ++failures;
}

void info(const std::string& name, const std::string& note) {
    std::cout << "[INFO] " << name << " -- " << note << '\n';
}

double elapsed_s(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

bool close_rel(double a, double b, double tol) {
    const double diff = std::abs(a - b);
    return diff <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

EmotionVector random_raw(std::mt19937_64& rng, std::size_t k) {
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    EmotionVector v(k);
    double sum = 0.0;
    do {
        sum = 0.0;
        for (double& x : v) {
            x = dist(rng);
            sum += x;
        }
    } while (sum == 0.0);
    return v;
}

// --- criterion: normalization suite -----------------------------------------

void criterion_normalization() {
    const auto start = Clock::now();
    std::mt19937_64 rng(1001);
    bool ok = true;
    std::string detail;
    for (int i = 0; i < 1000 && ok; ++i) {
        const auto raw = random_raw(rng, 7);
        const auto n = normalize_unit(raw);
        if (std::abs(l2_norm(n) - 1.0) > 1e-9) {
            ok = false;
            detail = "norm off at trial " + std::to_string(i);
        }
        const auto nn = normalize_unit(n);
        for (std::size_t j = 0; j < 7; ++j) {
            if (std::abs(nn[j] - n[j]) > 1e-12) {
                ok = false;
                detail = "not idempotent at trial " + std::to_string(i);
            }
        }
        // unique-max check before asserting argmax preservation
        const std::size_t am = argmax_index(raw);
        bool unique = true;
        for (std::size_t j = 0; j < 7; ++j) {
            if (j != am && raw[j] == raw[am]) unique = false;
        }
        if (unique && argmax_index(n) != am) {
            ok = false;
            detail = "argmax moved at trial " + std::to_string(i);
        }
    }
    const double secs = elapsed_s(start);
    if (secs >= 1.0) {
        ok = false;
        detail = "took " + std::to_string(secs) + " s (limit 1 s)";
    }
    report("normalization: 1000 random vectors, norm 1e-9, idempotent 1e-12, argmax kept",
           ok, detail);
}

// --- criterion: fusion oracle equivalence -----------------------------------

SynthSpec random_scene(std::mt19937_64& rng) {
    SynthSpec spec;
    const int n_segments = 1 + static_cast<int>(rng() % 2);
    const int n_channels = 1 + static_cast<int>(rng() % 4);  // <= 4
    // a channel keeps one modality for the whole scene, as a real perceptor would
    std::vector<Modality> modality_of(n_channels);
    for (int c = 0; c < n_channels; ++c) {
        const auto kind = rng() % 3;
        modality_of[c] = kind == 0   ? Modality::FER
                         : kind == 1 ? Modality::SER
                                     : Modality::PRESENCE;
    }
    std::int64_t budget_ms = 60'000;
    for (int s = 0; s < n_segments; ++s) {
        SynthSegment seg;
        seg.duration_ms = 2000 + static_cast<std::int64_t>(rng() % 20'000);
        seg.duration_ms = std::min(seg.duration_ms, budget_ms);
        budget_ms -= seg.duration_ms;
        for (int c = 0; c < n_channels; ++c) {
            SynthChannelScript ch;
            ch.channel = "ch" + std::to_string(c);
            ch.modality = modality_of[c];
            ch.rate_hz = 0.5 + static_cast<double>(rng() % 190) / 10.0;
            if (ch.modality == Modality::PRESENCE) {
                ch.face_count = static_cast<std::uint32_t>(rng() % 3);
                ch.voice_active = rng() % 2 == 0;
            } else {
                ch.profile = random_raw(rng, 7);
                ch.noise = static_cast<double>(rng() % 50) / 100.0;
            }
            seg.channels.push_back(std::move(ch));
        }
        spec.segments.push_back(std::move(seg));
        if (budget_ms <= 0) break;
    }
    return spec;
}

void criterion_fusion_oracle() {
    const auto start = Clock::now();
    const Taxonomy taxonomy = Taxonomy::default7();
    const FusionConfig cfg = FusionConfig::defaults(taxonomy);
    std::mt19937_64 rng(2002);
    bool ok = true;
    std::string detail;
    for (int trial = 0; trial < 50 && ok; ++trial) {
        const auto frames = synth_trace(random_scene(rng), rng());
        const auto got = run(frames, cfg, taxonomy);
        const auto expect = srf_oracle::brute_force_run(frames, cfg);
        if (got.size() != expect.size()) {
            ok = false;
            detail = "sample count mismatch in trial " + std::to_string(trial);
            break;
        }
        for (std::size_t i = 0; i < got.size(); ++i) {
            if (got[i].tick_time_ms != expect[i].tick_time_ms ||
                !close_rel(got[i].r_total, expect[i].r_total, 1e-12) ||
                !close_rel(got[i].r_fer, expect[i].r_fer, 1e-12) ||
                !close_rel(got[i].r_ser, expect[i].r_ser, 1e-12) ||
                !close_rel(got[i].r_presence, expect[i].r_presence, 1e-12)) {
                ok = false;
                detail = "trial " + std::to_string(trial) + " tick " +
                         std::to_string(got[i].tick_time_ms);
                break;
            }
        }
    }
    const double secs = elapsed_s(start);
    if (secs >= 30.0) {
        ok = false;
        detail = "took " + std::to_string(secs) + " s (limit 30 s)";
    }
    report("fusion: 50 random traces match the brute-force per-tick oracle at 1e-12",
           ok, detail);
}

// --- criterion: determinism (replay twice, socket vs replay) ----------------

std::string samples_text(const std::vector<RewardSample>& samples) {
    std::ostringstream os;
    write_samples(os, samples);
    return os.str();
}

void feed_channel_over_socket(std::uint16_t port, const std::vector<std::string>& lines) {
    const int fd = ::socket(AF_INET, SOCK_STREAM, 0);
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_port = htons(port);
    ::inet_pton(AF_INET, "127.0.0.1", &addr.sin_addr);
    if (::connect(fd, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) != 0) {
        ::close(fd);
        throw Error(ErrorCode::IoError, "connect failed");
    }
    for (const std::string& line : lines) {
        const std::string out = line + "\n";
        std::size_t off = 0;
        while (off < out.size()) {
            const ssize_t n = ::write(fd, out.data() + off, out.size() - off);
            if (n <= 0) break;
            off += static_cast<std::size_t>(n);
        }
    }
    ::close(fd);
}

void criterion_determinism() {
    const Taxonomy taxonomy = Taxonomy::default7();
    const FusionConfig cfg = FusionConfig::defaults(taxonomy);
    std::mt19937_64 rng(3003);
    const auto frames = synth_trace(random_scene(rng), 42);

    // channel registry covering the synthetic scene
    ChannelRegistry registry;
    std::map<std::string, Modality> channels;
    for (const auto& f : frames) channels.emplace(f.channel, f.modality);
    for (const auto& [id, modality] : channels) {
        ChannelSpec spec;
        spec.modality = modality;
        if (modality != Modality::PRESENCE) spec.labels = taxonomy.labels();
        registry.add(id, spec);
    }

    // replay path: trace file -> parse -> run, twice
    const auto trace_path =
        (std::filesystem::temp_directory_path() / "srf_accept_trace.srft").string();
    write_trace_file(trace_path, frames);
    auto replay_once = [&] {
        FrameParser parser(taxonomy, registry);
        const auto trace = read_trace_file(trace_path, parser);
        return samples_text(run(trace.frames, cfg, taxonomy));
    };
    const std::string replay_a = replay_once();
    const std::string replay_b = replay_once();

    // live path: one TCP connection per channel, frames partitioned by channel
    std::map<std::string, std::vector<std::string>> per_channel;
    for (const auto& f : frames) per_channel[f.channel].push_back(format_frame(f));

    TcpIngest ingest("127.0.0.1", 0, channels.size(), taxonomy, registry);
    std::vector<std::thread> feeders;
    for (const auto& [id, lines] : per_channel) {
        feeders.emplace_back(
            [port = ingest.port(), lines] { feed_channel_over_socket(port, lines); });
    }
    Engine engine(taxonomy, cfg);
    std::vector<RewardSample> live;
    std::optional<std::int64_t> last_t;
    while (auto frame = ingest.next()) {
        auto emitted = engine.advance(frame->t_ms - 1);
        live.insert(live.end(), emitted.begin(), emitted.end());
        engine.ingest(*frame);
        last_t = frame->t_ms;
    }
    if (last_t) {
        auto emitted = engine.advance(*last_t);
        live.insert(live.end(), emitted.begin(), emitted.end());
    }
    for (auto& t : feeders) t.join();
    const std::string live_text = samples_text(live);

    std::string detail;
    if (replay_a != replay_b) detail = "two replays differ";
    if (live_text != replay_a) detail = "socket feed differs from file replay";
    report("determinism: double replay and live-socket vs file replay are bitwise equal",
           replay_a == replay_b && live_text == replay_a, detail);
    std::filesystem::remove(trace_path);
}

// --- criterion: pearson oracle ----------------------------------------------

void criterion_pearson() {
    std::mt19937_64 rng(4004);
    std::uniform_real_distribution<double> dist(-10.0, 10.0);
    bool ok = true;
    std::string detail;
    int done = 0;
    while (done < 200 && ok) {
        const std::size_t n = 3 + rng() % 48;
        std::vector<double> x(n), y(n);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = dist(rng);
            y[i] = dist(rng);
        }
        double r;
        try {
            r = pearson(x, y);
        } catch (const Error&) {
            continue;
        }
        ++done;

        // direct covariance / (sigma_x * sigma_y) oracle
        double mx = 0, my = 0;
        for (std::size_t i = 0; i < n; ++i) {
            mx += x[i];
            my += y[i];
        }
        mx /= static_cast<double>(n);
        my /= static_cast<double>(n);
        double cov = 0, vx = 0, vy = 0;
        for (std::size_t i = 0; i < n; ++i) {
            cov += (x[i] - mx) * (y[i] - my);
            vx += (x[i] - mx) * (x[i] - mx);
            vy += (y[i] - my) * (y[i] - my);
        }
        cov /= static_cast<double>(n);
        const double oracle =
            cov / (std::sqrt(vx / static_cast<double>(n)) *
                   std::sqrt(vy / static_cast<double>(n)));
        if (!close_rel(r, oracle, 1e-12)) {
            ok = false;
            detail = "oracle mismatch at case " + std::to_string(done);
        }

        std::vector<double> ax(n), nx(n);
        for (std::size_t i = 0; i < n; ++i) {
            ax[i] = 3.5 * x[i] + 2.0;
            nx[i] = -2.0 * x[i];
        }
        if (!close_rel(pearson(ax, y), r, 1e-9) || !close_rel(pearson(nx, y), -r, 1e-9)) {
            ok = false;
            detail = "affine/sign property failed at case " + std::to_string(done);
        }
    }
    const double fixed = pearson({1, 2, 3, 4}, {1, 3, 2, 4});
    if (std::abs(fixed - 0.8) > 1e-12) {
        ok = false;
        detail = "fixed case returned " + format_double(fixed);
    }
    report("pearson: 200 random pairs match cov/(sx*sy) oracle at 1e-12; "
           "affine and sign properties; (1,2,3,4)x(1,3,2,4) = 0.8",
           ok, detail);
}

// --- criterion: metric forced values ----------------------------------------

void criterion_metric_forced() {
    const Taxonomy taxonomy = Taxonomy::default7();
    std::mt19937_64 rng(5005);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    bool ok = true;
    std::string detail;

    for (int trial = 0; trial < 100 && ok; ++trial) {
        std::vector<PredictionRecord> preds;
        const std::size_t n_actors = 2 + rng() % 12;
        const std::size_t n = 10 + rng() % 90;
        for (std::size_t i = 0; i < n; ++i) {
            PredictionRecord p;
            p.sample_id = "s" + std::to_string(i);
            p.actor_id = "actor" + std::to_string(rng() % n_actors);
            p.true_index = rng() % 7;
            p.scores.resize(7);
            for (double& x : p.scores) x = dist(rng);
            preds.push_back(std::move(p));
        }

        const auto acc = top_k_accuracy(preds, taxonomy, 7);
        if (acc.back().second != 1.0) {
            ok = false;
            detail = "top-7 accuracy not forced to 1";
        }

        const auto rows = confusion_matrix(preds, taxonomy, ConfusionNormalize::Row);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            double sum = 0.0;
            bool support = false;
            for (double x : rows[i]) {
                sum += x;
                if (x != 0.0) support = true;
            }
            if (support && std::abs(sum - 1.0) > 1e-9) {
                ok = false;
                detail = "row sum off by " + format_double(sum - 1.0);
            }
        }

        const auto split = split_by_actor(preds, 0.3, rng());
        std::set<std::string> train_actors, test_actors;
        for (const auto& p : split.train) train_actors.insert(p.actor_id);
        for (const auto& p : split.test) test_actors.insert(p.actor_id);
        for (const auto& a : test_actors) {
            if (train_actors.count(a)) {
                ok = false;
                detail = "actor on both sides: " + a;
            }
        }
        if (split.train.size() + split.test.size() != preds.size()) {
            ok = false;
            detail = "split loses samples";
        }
    }
    report("metrics: top-7 forced to 1.0, confusion rows sum to 1e-9, "
           "actor split disjoint on 100 fixtures",
           ok, detail);
}

// --- criterion: sign-ordering end-to-end demo -------------------------------

void criterion_sign_ordering() {
    bool ok = true;
    std::string detail;
    try {
        const std::string dir = SRF_DATA_DIR;
        const RunConfig cfg = load_run_config(dir + "/demo/demo.conf");
        const auto clips = load_clip_manifest(dir + "/demo/clips.txt");
        const auto report_ =
            evaluate_clips(clips, cfg.fusion, cfg.taxonomy, cfg.registry);

        double happy = 0.0, angry = 0.0;
        for (const auto& pc : report_.clips) {
            if (pc.label > 0) happy = pc.means.total;
            if (pc.label < 0) angry = pc.means.total;
        }
        if (!(happy > 0.0 && angry < 0.0)) {
            ok = false;
            detail = "means not sign-ordered: happy=" + format_double(happy) +
                     " angry=" + format_double(angry);
        }
        if (std::abs(report_.pearson_total - 1.0) > 1e-12) {
            ok = false;
            detail = "pearson = " + format_double(report_.pearson_total);
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report("end-to-end: bundled happy/angry demo gives mean(happy) > 0 > mean(angry), "
           "pearson 1.0",
           ok, detail);
}

// --- criterion: population math ---------------------------------------------

void criterion_population() {
    bool ok = true;
    std::string detail;
    const auto eq = InternalisationFn::soft_equity(1.0);
    if (std::abs(eq(1.0) - std::log(2.0)) > 1e-12 ||
        std::abs(eq(-1.0) + (std::exp(1.0) - 1.0)) > 1e-12) {
        ok = false;
        detail = "closed-form spot values off";
    }

    std::mt19937_64 rng(6006);
    std::uniform_real_distribution<double> dist(-50.0, 50.0);
    for (int i = 0; i < 1000 && ok; ++i) {
        double r1 = dist(rng), r2 = dist(rng);
        if (r1 == r2) continue;
        if (r1 > r2) std::swap(r1, r2);
        if (!(eq(r1) < eq(r2))) {
            ok = false;
            detail = "monotonicity failed";
        }
    }

    std::uniform_real_distribution<double> pos(0.0, 30.0);
    for (int i = 0; i < 200 && ok; ++i) {
        const double m = pos(rng);
        const double delta = pos(rng) / 30.0 * m;
        const double spread = population_return({{"a", m + delta}, {"b", m - delta}}, eq);
        const double equal = population_return({{"a", m}, {"b", m}}, eq);
        if (spread > equal + 1e-12) {
            ok = false;
            detail = "mean-preserving spread increased the return";
        }
    }

    const auto id = InternalisationFn::identity();
    std::vector<IndividualReturn> returns;
    double plain = 0.0;
    for (int i = 0; i < 100; ++i) returns.push_back({"i" + std::to_string(i), dist(rng)});
    for (const auto& r : returns) plain += r.value;
    if (population_return(returns, id) != plain) {
        ok = false;
        detail = "identity family is not the exact sum";
    }

    report("population: soft_equity spot values 1e-12, monotone on 1000 pairs, "
           "equity on 200 spreads, identity reduces to exact sum",
           ok, detail);
}

// --- criterion: robust parsing ----------------------------------------------

void criterion_robust_parsing() {
    const Taxonomy taxonomy = Taxonomy::default7();
    const auto registry = ChannelRegistry::identity(
        taxonomy, {{"fer_a", Modality::FER}, {"ser_b", Modality::SER},
                   {"cam", Modality::PRESENCE}});
    std::mt19937_64 rng(7007);

    const std::vector<std::string> templates = {
        "1000|fer_a|FER|0.7,0.1,0.05,0.05,0.05,0.03,0.02",
        "1000|ser_b|SER|0.1,0.1,0.1,0.1,0.1,0.1,0.4",
        "1000|cam|PRESENCE|faces=1,voice=0",
    };

    bool ok = true;
    std::string detail;
    std::size_t outcomes = 0;
    std::size_t lines = 0;
    FrameParser parser(taxonomy, registry);
    try {
        for (int i = 0; i < 10'000; ++i) {
            std::string line = templates[rng() % templates.size()];
            const std::size_t mutations = 1 + rng() % 6;
            for (std::size_t m = 0; m < mutations; ++m) {
                const auto op = rng() % 3;
                if (line.empty()) break;
                const std::size_t pos = rng() % line.size();
                if (op == 0) {
                    line[pos] = static_cast<char>(rng() % 256);
                } else if (op == 1) {
                    line.erase(pos, 1);
                } else {
                    line.insert(pos, 1, static_cast<char>(rng() % 256));
                }
            }
            ++lines;
            const ParseResult result = parser.parse(line);
            // exactly one outcome per line: a frame or a single diagnostic
            outcomes += std::holds_alternative<PerceptorFrame>(result) ? 1 : 0;
            outcomes += std::holds_alternative<FrameDiagnostic>(result) ? 1 : 0;
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("parser threw: ") + e.what();
    }
    if (ok && outcomes != lines) {
        ok = false;
        detail = "outcome count mismatch";
    }
    report("parsing: 10,000 mutated lines, zero crashes, one outcome per line", ok,
           detail);
}

}  // namespace

int main() {
    info("paper-scale reproduction",
         "dataset-scale figures (r = 0.491, model accuracies) need the unreleased "
         "clip corpus and trained models; covered instead by the oracle and "
         "property criteria below");
    criterion_normalization();
    criterion_fusion_oracle();
    criterion_determinism();
    criterion_pearson();
    criterion_metric_forced();
    criterion_sign_ordering();
    criterion_population();
    criterion_robust_parsing();

    if (failures > 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
