#pragma once

#include <stdexcept>
#include <string>

namespace mstci {

enum class errc {
    self_loop,
    duplicate_edge,
    vertex_out_of_range,
    malformed_graph6,
    not_connected,
    invalid_tree,
    not_universal,
    zero_intersection,
    infeasible,
    unsupported,
    io_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::self_loop: return "SelfLoop";
        case errc::duplicate_edge: return "DuplicateEdge";
        case errc::vertex_out_of_range: return "VertexOutOfRange";
        case errc::malformed_graph6: return "MalformedGraph6";
        case errc::not_connected: return "NotConnected";
        case errc::invalid_tree: return "InvalidTree";
        case errc::not_universal: return "NotUniversal";
        case errc::zero_intersection: return "ZeroIntersection";
        case errc::infeasible: return "Infeasible";
        case errc::unsupported: return "Unsupported";
        case errc::io_error: return "IoError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace mstci
