#pragma once

#include <cstddef>
#include <vector>

namespace srf {

/// Pearson correlation coefficient: covariance over the product of the
/// (population) standard deviations. Throws LengthMismatch and
/// ZeroVariance.
double pearson(const std::vector<double>& x, const std::vector<double>& y);

/// Summary of a sample: population std, percentiles by linear
/// interpolation between order statistics.
struct DescriptiveStats {
    std::size_t count = 0;
    double mean = 0.0;
    double std_dev = 0.0;
    double min = 0.0;
    double p25 = 0.0;
    double median = 0.0;
    double p75 = 0.0;
    double max = 0.0;

    static DescriptiveStats of(std::vector<double> values);  // throws EmptyClip on empty
};

/// Linear-interpolated quantile of already sorted values, q in [0,1].
double quantile_sorted(const std::vector<double>& sorted, double q);

/// Fixed-width histogram over [lo, hi]; values outside are clamped into
/// the end bins.
std::vector<std::size_t> histogram(const std::vector<double>& values, double lo,
                                   double hi, std::size_t bins);

}  // namespace srf
