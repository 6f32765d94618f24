#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "srf/merge.hpp"
#include "srf/registry.hpp"
#include "srf/taxonomy.hpp"
#include "srf/wire.hpp"

namespace srf {

/// Listens on a TCP socket and ingests wire-format lines, one connection
/// per perceptor channel. Frames from all connections come out of next()
/// in merged-stream order; invalid lines are logged and counted.
///
/// Because the merge key is (t, channel, source) and each connection
/// carries its own channel, the output order does not depend on accept
/// order or network timing.
class TcpIngest {
public:
    /// Binds host:port (port 0 picks an ephemeral port) and accepts exactly
    /// n_connections connections.
    TcpIngest(const std::string& host, std::uint16_t port, std::size_t n_connections,
              const Taxonomy& taxonomy, const ChannelRegistry& registry);
    ~TcpIngest();

    TcpIngest(const TcpIngest&) = delete;
    TcpIngest& operator=(const TcpIngest&) = delete;

    std::uint16_t port() const { return port_; }

    /// Blocking merged pop; nullopt after every connection has closed.
    std::optional<PerceptorFrame> next() { return merger_.pop(); }

    std::size_t diagnostic_count() const { return diagnostics_.load(); }

private:
    void accept_loop(std::size_t n_connections);
    void reader_loop(int fd, std::size_t source);

    const Taxonomy* taxonomy_;
    const ChannelRegistry* registry_;
    int listen_fd_ = -1;
    std::uint16_t port_ = 0;
    StreamMerger merger_;
    std::atomic<std::size_t> diagnostics_{0};
    std::thread accept_thread_;
    std::vector<std::thread> readers_;
};

}  // namespace srf
