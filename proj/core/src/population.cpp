#include "srf/population.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "srf/error.hpp"
#include "srf/trace_io.hpp"
#include "srf/wire.hpp"

namespace srf {

double social_return(const std::vector<RewardSample>& samples) {
    double sum = 0.0;
    for (const RewardSample& s : samples) sum += s.r_total;
    return sum;
}

InternalisationFn InternalisationFn::identity() { return InternalisationFn{}; }

InternalisationFn InternalisationFn::soft_equity(double scale) {
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        throw Error(ErrorCode::InvalidSpec, "soft_equity scale must be > 0");
    }
    return InternalisationFn{Family::SoftEquity, scale};
}

double InternalisationFn::operator()(double r) const {
    if (family == Family::Identity) return r;
    if (r >= 0.0) return scale * std::log1p(r / scale);
    return -scale * std::expm1(-r / scale);
}

double population_return(const std::vector<IndividualReturn>& returns,
                         const InternalisationFn& f) {
    double sum = 0.0;
    for (const IndividualReturn& r : returns) sum += f(r.value);
    return sum;
}

std::vector<IndividualReturn> load_population_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open population manifest: " + path);
    const auto base = std::filesystem::path(path).parent_path();

    std::vector<IndividualReturn> returns;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        const auto sep = line.find('|');
        if (sep == std::string::npos || sep == 0 || sep + 1 >= line.size()) {
            throw Error(ErrorCode::IoError,
                        "bad population manifest line " + std::to_string(lineno));
        }
        IndividualReturn r;
        r.individual_id = line.substr(0, sep);
        std::filesystem::path p(line.substr(sep + 1));
        const std::string resolved = p.is_absolute() ? p.string() : (base / p).string();
        r.value = social_return(read_samples_file(resolved));
        returns.push_back(std::move(r));
    }
    return returns;
}

std::string render_population_report(const std::vector<IndividualReturn>& returns,
                                     const InternalisationFn& f) {
    std::ostringstream os;
    os << "# population_return\n";
    os << "individual_id\tR\tf_R\n";
    double total = 0.0;
    for (const IndividualReturn& r : returns) {
        const double fr = f(r.value);
        total += fr;
        os << r.individual_id << '\t' << format_double(r.value) << '\t'
           << format_double(fr) << '\n';
    }
    os << "total\t\t" << format_double(total) << '\n';
    return os.str();
}

}  // namespace srf
