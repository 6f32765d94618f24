#include <filesystem>
#include <fstream>

#include <doctest.h>

#include "srf/error.hpp"
#include "srf/run_config.hpp"
#include "srf/vector_ops.hpp"

using namespace srf;

namespace {

std::string write_config(const std::string& name, const std::string& body) {
    const auto dir = std::filesystem::temp_directory_path() / "srf_test_cfg";
    std::filesystem::create_directories(dir);
    const auto path = (dir / name).string();
    std::ofstream out(path);
    out << body;
    return path;
}

constexpr const char* kGoodConfig = R"(# demo configuration
[taxonomy]
labels = anger,disgust,fear,happiness,sadness,surprise,neutral

[fusion]
k_fer = 1.0
k_ser = 0.25
k_presence = 0.1
tick_period_ms = 100
w_fer = happiness:1,surprise:0.5,anger:-1,disgust:-1,fear:-1,sadness:-1
w_fer_normalize = true
w_ser = happiness:1,surprise:0.5,anger:-1,disgust:-1,fear:-1,sadness:-1
w_ser_normalize = true

[eval]
histogram_bins = 20
test_fraction = 0.25
seed = 7

[channel:fer_rmn]
modality = FER

[channel:ser_rav]
modality = SER
labels = anger,calm,disgust,fear,happiness,sadness,surprise
map = calm:neutral

[channel:presence_cam]
modality = PRESENCE
)";

}  // namespace

TEST_CASE("load_run_config accepts a full configuration") {
    const auto path = write_config("good.conf", kGoodConfig);
    const RunConfig cfg = load_run_config(path);
    CHECK(cfg.taxonomy.size() == 7);
    CHECK(cfg.fusion.k_ser == 0.25);
    CHECK(std::abs(l2_norm(cfg.fusion.w_fer) - 1.0) < 1e-9);
    CHECK(cfg.fusion.w_fer[*cfg.taxonomy.index_of("happiness")] > 0.0);
    CHECK(cfg.fusion.w_fer[*cfg.taxonomy.index_of("anger")] < 0.0);
    CHECK(cfg.registry.channels().size() == 3);
    const ChannelSpec* ser = cfg.registry.find("ser_rav");
    REQUIRE(ser);
    CHECK(ser->labels.size() == 7);
    CHECK(ser->label_map.at("calm") == "neutral");
    CHECK(cfg.seed == 7);
}

TEST_CASE("unknown keys and sections are rejected") {
    CHECK_THROWS_AS(load_run_config(write_config("k.conf", "[fusion]\nbogus = 1\n")),
                    Error);
    CHECK_THROWS_AS(load_run_config(write_config("s.conf", "[mystery]\nx = 1\n")),
                    Error);
}

TEST_CASE("non-unit weight vector fails validation with a named invariant") {
    const auto path = write_config("w.conf",
                                   "[fusion]\nw_fer = happiness:1,anger:-1\n");
    try {
        load_run_config(path);
        FAIL("expected ConfigError");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ConfigError);
        CHECK(std::string(e.what()).find("w_fer") != std::string::npos);
    }
}

TEST_CASE("channel label mapped outside the taxonomy is rejected at load") {
    const auto path = write_config(
        "m.conf", "[channel:x]\nmodality = SER\nlabels = anger,mystery\n");
    CHECK_THROWS_AS(load_run_config(path), Error);
}

TEST_CASE("defaults apply when sections are omitted") {
    const RunConfig cfg = load_run_config(write_config("empty.conf", "\n"));
    CHECK(cfg.taxonomy.size() == 7);
    CHECK(cfg.fusion.tick_period_ms == 100);
    CHECK(cfg.fusion.fer_window_ms == 500);
    CHECK(cfg.fusion.ser_window_ms == 2000);
    CHECK(cfg.fusion.presence_window_ms == 1000);
    CHECK(cfg.histogram_bins == 20);
    CHECK(std::abs(l2_norm(cfg.fusion.w_fer) - 1.0) < 1e-9);
}

TEST_CASE("bad numbers and booleans are named") {
    CHECK_THROWS_AS(load_run_config(write_config("n.conf", "[fusion]\nk_fer = soon\n")),
                    Error);
    CHECK_THROWS_AS(
        load_run_config(write_config("b.conf",
                                     "[fusion]\nw_fer = happiness:1\nw_fer_normalize = maybe\n")),
        Error);
}
