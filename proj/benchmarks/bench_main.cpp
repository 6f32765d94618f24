#include <benchmark/benchmark.h>

#include "srf/engine.hpp"
#include "srf/stats.hpp"
#include "srf/synth.hpp"
#include "srf/vector_ops.hpp"

namespace {

using namespace srf;

SynthSpec busy_scene(int n_fer) {
    SynthSpec spec;
    SynthSegment seg;
    seg.duration_ms = 60'000;
    for (int i = 0; i < n_fer; ++i) {
        SynthChannelScript ch;
        ch.channel = "fer_" + std::to_string(i);
        ch.modality = Modality::FER;
        ch.rate_hz = 30.0;
        ch.profile = {0.1, 0.1, 0.1, 0.4, 0.1, 0.1, 0.1};
        ch.noise = 0.2;
        seg.channels.push_back(ch);
    }
    SynthChannelScript presence;
    presence.channel = "cam";
    presence.modality = Modality::PRESENCE;
    presence.rate_hz = 10.0;
    presence.face_count = 1;
    seg.channels.push_back(presence);
    spec.segments.push_back(std::move(seg));
    return spec;
}

void BM_normalize_unit(benchmark::State& state) {
    EmotionVector raw = {0.7, 0.1, 0.05, 0.05, 0.05, 0.03, 0.02};
    for (auto _ : state) {
        benchmark::DoNotOptimize(normalize_unit(raw));
    }
}
BENCHMARK(BM_normalize_unit);

void BM_engine_60s(benchmark::State& state) {
    const Taxonomy taxonomy = Taxonomy::default7();
    const FusionConfig cfg = FusionConfig::defaults(taxonomy);
    const auto frames = synth_trace(busy_scene(static_cast<int>(state.range(0))), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run(frames, cfg, taxonomy));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(frames.size()));
}
BENCHMARK(BM_engine_60s)->Arg(1)->Arg(4);

void BM_pearson(benchmark::State& state) {
    std::vector<double> x, y;
    for (int i = 0; i < 1000; ++i) {
        x.push_back(i);
        y.push_back(i * 0.5 + (i % 7));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(pearson(x, y));
    }
}
BENCHMARK(BM_pearson);

}  // namespace

BENCHMARK_MAIN();
