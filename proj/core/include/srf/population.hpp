#pragma once

#include <string>
#include <vector>

#include "srf/reward.hpp"

namespace srf {

/// Undiscounted sum of one individual's reward over time.
struct IndividualReturn {
    std::string individual_id;
    double value = 0.0;
};

double social_return(const std::vector<RewardSample>& samples);

/// Monotone transform applied to individual returns before population
/// aggregation. soft_equity is linear at the origin (slope 1), concave on
/// the positive side and super-linearly decreasing on the negative side:
///   f(R) =  a * ln(1 + R/a)      for R >= 0
///   f(R) = -a * (exp(-R/a) - 1)  for R <  0
struct InternalisationFn {
    enum class Family { Identity, SoftEquity };

    static InternalisationFn identity();
    static InternalisationFn soft_equity(double scale);  // scale > 0, else InvalidSpec

    double operator()(double r) const;

    Family family = Family::Identity;
    double scale = 1.0;
};

/// Sum of internalised returns over the population; empty population -> 0.
double population_return(const std::vector<IndividualReturn>& returns,
                         const InternalisationFn& f);

/// Manifest lines: <individual_id>|<path-to-.srfr>; relative paths resolve
/// against the manifest's directory.
std::vector<IndividualReturn> load_population_manifest(const std::string& path);

/// Table of (individual_id, R, f(R)) plus the population total.
std::string render_population_report(const std::vector<IndividualReturn>& returns,
                                     const InternalisationFn& f);

}  // namespace srf
