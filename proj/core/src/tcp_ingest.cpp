#include "srf/tcp_ingest.hpp"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cstring>

#include "srf/error.hpp"
#include "srf/log.hpp"

namespace srf {

TcpIngest::TcpIngest(const std::string& host, std::uint16_t port,
                     std::size_t n_connections, const Taxonomy& taxonomy,
                     const ChannelRegistry& registry)
    : taxonomy_(&taxonomy), registry_(&registry), merger_(n_connections) {
    listen_fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
    if (listen_fd_ < 0) throw Error(ErrorCode::IoError, "socket() failed");
    int one = 1;
    ::setsockopt(listen_fd_, SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));

    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_port = htons(port);
    if (::inet_pton(AF_INET, host.c_str(), &addr.sin_addr) != 1) {
        ::close(listen_fd_);
        throw Error(ErrorCode::IoError, "bad listen address: " + host);
    }
    if (::bind(listen_fd_, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) != 0 ||
        ::listen(listen_fd_, static_cast<int>(n_connections)) != 0) {
        ::close(listen_fd_);
        throw Error(ErrorCode::IoError,
                    "cannot listen on " + host + ":" + std::to_string(port));
    }
    sockaddr_in bound{};
    socklen_t len = sizeof(bound);
    ::getsockname(listen_fd_, reinterpret_cast<sockaddr*>(&bound), &len);
    port_ = ntohs(bound.sin_port);

    readers_.reserve(n_connections);
    accept_thread_ = std::thread([this, n_connections] { accept_loop(n_connections); });
}

TcpIngest::~TcpIngest() {
    if (listen_fd_ >= 0) {
        ::shutdown(listen_fd_, SHUT_RDWR);
        ::close(listen_fd_);
        listen_fd_ = -1;
    }
    if (accept_thread_.joinable()) accept_thread_.join();
    for (std::thread& t : readers_) {
        if (t.joinable()) t.join();
    }
}

void TcpIngest::accept_loop(std::size_t n_connections) {
    std::size_t accepted = 0;
    while (accepted < n_connections) {
        const int fd = ::accept(listen_fd_, nullptr, nullptr);
        if (fd < 0) break;  // listener closed during shutdown
        const std::size_t source = accepted++;
        readers_.emplace_back([this, fd, source] { reader_loop(fd, source); });
        log_info("accepted connection " + std::to_string(source));
    }
    // Mark never-connected sources closed so the merge can drain.
    for (std::size_t i = accepted; i < n_connections; ++i) merger_.close(i);
}

void TcpIngest::reader_loop(int fd, std::size_t source) {
    FrameParser parser(*taxonomy_, *registry_);
    std::string pending;
    char buf[4096];
    while (true) {
        const ssize_t n = ::read(fd, buf, sizeof(buf));
        if (n <= 0) break;
        pending.append(buf, static_cast<std::size_t>(n));
        std::size_t start = 0;
        while (true) {
            const std::size_t nl = pending.find('\n', start);
            if (nl == std::string::npos) break;
            const std::string line = pending.substr(start, nl - start);
            start = nl + 1;
            if (line.empty()) continue;
            ParseResult parsed = parser.parse(line);
            if (auto* frame = std::get_if<PerceptorFrame>(&parsed)) {
                merger_.push(source, std::move(*frame));
            } else {
                const auto& d = std::get<FrameDiagnostic>(parsed);
                ++diagnostics_;
                log_warn("source " + std::to_string(source) + ": " +
                         to_string(d.kind) + ": " + d.detail);
            }
        }
        pending.erase(0, start);
    }
    if (!pending.empty()) {
        ParseResult parsed = parser.parse(pending);
        if (auto* frame = std::get_if<PerceptorFrame>(&parsed)) {
            merger_.push(source, std::move(*frame));
        } else {
            ++diagnostics_;
        }
    }
    ::close(fd);
    merger_.close(source);
}

}  // namespace srf
