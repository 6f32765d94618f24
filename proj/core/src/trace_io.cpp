#include "srf/trace_io.hpp"

#include <fstream>
#include <sstream>

#include "srf/error.hpp"

namespace srf {

TraceReadResult read_trace(std::istream& in, FrameParser& parser) {
    TraceReadResult result;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || (line.size() == 1 && line[0] == '\r')) continue;
        ParseResult parsed = parser.parse(line);
        if (auto* frame = std::get_if<PerceptorFrame>(&parsed)) {
            result.frames.push_back(std::move(*frame));
        } else {
            const auto& d = std::get<FrameDiagnostic>(parsed);
            std::ostringstream os;
            os << "line " << lineno << ": " << to_string(d.kind) << ": " << d.detail;
            result.diagnostics.push_back(os.str());
        }
    }
    return result;
}

TraceReadResult read_trace_file(const std::string& path, FrameParser& parser) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open trace: " + path);
    return read_trace(in, parser);
}

void write_trace_file(const std::string& path,
                      const std::vector<PerceptorFrame>& frames) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoError, "cannot write trace: " + path);
    for (const PerceptorFrame& f : frames) out << format_frame(f) << '\n';
}

void write_samples(std::ostream& out, const std::vector<RewardSample>& samples) {
    for (const RewardSample& s : samples) out << format_sample(s) << '\n';
}

void write_samples_file(const std::string& path,
                        const std::vector<RewardSample>& samples) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoError, "cannot write samples: " + path);
    write_samples(out, samples);
}

std::vector<RewardSample> read_samples_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open samples: " + path);
    std::vector<RewardSample> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        out.push_back(parse_sample(line));
    }
    return out;
}

}  // namespace srf
