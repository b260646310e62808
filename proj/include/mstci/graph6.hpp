#pragma once

#include <fstream>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "mstci/graph.hpp"

// graph6 short form: one graph per line, n encoded as byte n+63, then the
// upper triangle of the adjacency matrix in column-major order, packed
// big-endian into 6-bit groups, each group stored as byte value+63.
namespace mstci {

inline std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 62) fail(errc::unsupported, "short-form graph6 requires n <= 62");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int group = 0;
    int used = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            group = (group << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++used == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                used = 0;
            }
        }
    }
    if (used > 0) out.push_back(static_cast<char>((group << (6 - used)) + 63));
    return out;
}

inline Graph parse_graph6(std::string_view line) {
    // strip a trailing newline so raw file lines parse as-is
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) fail(errc::malformed_graph6, "empty line");
    for (char c : line)
        if (c < 63 || c > 126)
            fail(errc::malformed_graph6, "byte " + std::to_string(static_cast<int>(static_cast<unsigned char>(c))) +
                                             " outside printable range 63..126");
    if (line[0] == 126) fail(errc::unsupported, "long-form vertex counts are not supported");
    const int n = line[0] - 63;
    if (n < 1) fail(errc::malformed_graph6, "vertex count must be at least 1");
    if (n > kMaxVertices)
        fail(errc::unsupported, "graphs with n > " + std::to_string(kMaxVertices) + " are not supported");
    const int bits = n * (n - 1) / 2;
    const int expected = 1 + (bits + 5) / 6;
    if (static_cast<int>(line.size()) != expected)
        fail(errc::malformed_graph6, "expected " + std::to_string(expected) + " bytes for n=" + std::to_string(n) +
                                         ", got " + std::to_string(line.size()));
    std::vector<Edge> edges;
    int t = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++t) {
            const int group = line[1 + t / 6] - 63;
            if ((group >> (5 - t % 6)) & 1)
                edges.push_back({static_cast<std::uint8_t>(row), static_cast<std::uint8_t>(col)});
        }
    }
    for (; t < 6 * (expected - 1); ++t) {
        const int group = line[1 + t / 6] - 63;
        if ((group >> (5 - t % 6)) & 1) fail(errc::malformed_graph6, "nonzero padding bits");
    }
    // column-major order sorts as (v, u); re-sort to the canonical (u, v) order
    std::sort(edges.begin(), edges.end());
    return Graph::from_sorted_edges(n, std::move(edges));
}

// Reads every graph in a graph6 stream; '>' header/comment lines and blank
// lines are skipped. Line numbers are reported on parse errors.
inline std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> graphs;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '>') continue;
        try {
            graphs.push_back(parse_graph6(line));
        } catch (const Error& e) {
            fail(e.code(), "line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return graphs;
}

inline std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::io_error, "cannot open " + path);
    return read_graph6_stream(in);
}

}  // namespace mstci
