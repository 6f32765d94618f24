#pragma once

#include <cstdint>
#include <string>

#include "srf/registry.hpp"
#include "srf/reward.hpp"
#include "srf/taxonomy.hpp"

namespace srf {

/// Whole-run configuration, loaded from one sectioned key-value file and
/// validated completely before any processing starts.
///
///   [taxonomy]  labels = anger,disgust,...
///   [fusion]    k_fer / k_ser / k_presence / tick_period_ms / *_window_ms /
///               w_fer = label:weight,... / w_fer_normalize = true / ...
///   [eval]      histogram_bins / test_fraction / seed
///   [channel:<id>]  modality = FER|SER|PRESENCE / labels = ... /
///                   map = src:target,...  (target DROP discards the mass)
///
/// Unknown sections or keys are rejected.
struct RunConfig {
    Taxonomy taxonomy = Taxonomy::default7();
    ChannelRegistry registry;
    FusionConfig fusion = FusionConfig::defaults(Taxonomy::default7());
    std::size_t histogram_bins = 20;
    double test_fraction = 0.25;
    std::uint64_t seed = 0;
};

/// Throws ConfigError naming the offending key or invariant.
RunConfig load_run_config(const std::string& path);

}  // namespace srf
