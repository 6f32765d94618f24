#include "srf/stats.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "srf/error.hpp"

namespace srf {

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) {
        throw Error(ErrorCode::LengthMismatch,
                    std::to_string(x.size()) + " vs " + std::to_string(y.size()));
    }
    if (x.size() < 2) {
        throw Error(ErrorCode::LengthMismatch, "need at least 2 points");
    }
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) {
        throw Error(ErrorCode::ZeroVariance, "constant input");
    }
    const double r = sxy / std::sqrt(sxx * syy);
    return std::clamp(r, -1.0, 1.0);
}

double quantile_sorted(const std::vector<double>& sorted, double q) {
    const std::size_t n = sorted.size();
    if (n == 1) return sorted[0];
    const double pos = q * static_cast<double>(n - 1);
    const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, n - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

DescriptiveStats DescriptiveStats::of(std::vector<double> values) {
    if (values.empty()) {
        throw Error(ErrorCode::EmptyClip, "no values to summarize");
    }
    std::sort(values.begin(), values.end());
    DescriptiveStats s;
    s.count = values.size();
    const double n = static_cast<double>(values.size());
    for (double v : values) s.mean += v;
    s.mean /= n;
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.std_dev = std::sqrt(ss / n);
    s.min = values.front();
    s.max = values.back();
    s.p25 = quantile_sorted(values, 0.25);
    s.median = quantile_sorted(values, 0.5);
    s.p75 = quantile_sorted(values, 0.75);
    return s;
}

std::vector<std::size_t> histogram(const std::vector<double>& values, double lo,
                                   double hi, std::size_t bins) {
    if (bins == 0 || !(hi > lo)) {
        throw Error(ErrorCode::InvalidSpec, "histogram needs bins > 0 and hi > lo");
    }
    std::vector<std::size_t> counts(bins, 0);
    const double width = (hi - lo) / static_cast<double>(bins);
    for (double v : values) {
        auto bin = static_cast<std::int64_t>(std::floor((v - lo) / width));
        bin = std::clamp<std::int64_t>(bin, 0, static_cast<std::int64_t>(bins) - 1);
        ++counts[static_cast<std::size_t>(bin)];
    }
    return counts;
}

}  // namespace srf
