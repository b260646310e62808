#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mstci/error.hpp"

namespace mstci {

// Vertex sets fit a 16-bit mask and edge sets a 128-bit mask, so every
// set operation below is a handful of word ops.
inline constexpr int kMaxVertices = 16;
inline constexpr int kMaxEdges = kMaxVertices * (kMaxVertices - 1) / 2;

using VertexMask = std::uint16_t;
using EdgeMask = unsigned __int128;

inline constexpr EdgeMask edge_bit(int index) {
    return EdgeMask{1} << index;
}

inline int edge_mask_count(EdgeMask m) {
    return std::popcount(static_cast<std::uint64_t>(m)) + std::popcount(static_cast<std::uint64_t>(m >> 64));
}

inline int edge_mask_lowest(EdgeMask m) {
    const auto low = static_cast<std::uint64_t>(m);
    if (low != 0) return std::countr_zero(low);
    return 64 + std::countr_zero(static_cast<std::uint64_t>(m >> 64));
}

struct Edge {
    std::uint8_t u = 0;  // u < v always
    std::uint8_t v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on labeled vertices 0..n-1. Edges are kept
// sorted lexicographically so edge indices are stable across runs;
// adjacency masks are derived on construction and never mutated.
class Graph {
public:
    Graph() = default;

    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs) {
        if (n < 1 || n > kMaxVertices)
            fail(errc::vertex_out_of_range,
                 "vertex count must be in [1," + std::to_string(kMaxVertices) + "], got " + std::to_string(n));
        std::vector<Edge> edges;
        edges.reserve(pairs.size());
        for (auto [a, b] : pairs) {
            if (a < 0 || b < 0 || a >= n || b >= n)
                fail(errc::vertex_out_of_range, "edge (" + std::to_string(a) + "," + std::to_string(b) +
                                                    ") outside [0," + std::to_string(n) + ")");
            if (a == b)
                fail(errc::self_loop, "self-loop at vertex " + std::to_string(a));
            if (a > b) std::swap(a, b);
            edges.push_back({static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)});
        }
        std::sort(edges.begin(), edges.end());
        if (auto it = std::adjacent_find(edges.begin(), edges.end()); it != edges.end())
            fail(errc::duplicate_edge,
                 "duplicate edge (" + std::to_string(it->u) + "," + std::to_string(it->v) + ")");
        return Graph(n, std::move(edges));
    }

    // Caller guarantees edges are normalized, sorted and unique.
    static Graph from_sorted_edges(int n, std::vector<Edge> edges) {
        return Graph(n, std::move(edges));
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int index) const { return edges_[index]; }

    VertexMask neighbors(int v) const { return adjacency_[v]; }
    VertexMask full_vertex_mask() const { return static_cast<VertexMask>((1u << n_) - 1); }

    bool has_edge(int u, int v) const { return (adjacency_[u] >> v) & 1u; }

    int degree(int v) const { return std::popcount(adjacency_[v]); }

    std::vector<int> degrees() const {
        std::vector<int> d(n_);
        for (int v = 0; v < n_; ++v) d[v] = degree(v);
        return d;
    }

    int max_degree() const {
        int best = 0;
        for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
        return best;
    }

    int min_degree() const {
        int best = n_;
        for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
        return best;
    }

    // Smallest vertex adjacent to all the others, if any.
    std::optional<int> universal_vertex() const {
        const VertexMask all = full_vertex_mask();
        for (int v = 0; v < n_; ++v)
            if ((adjacency_[v] | (VertexMask{1} << v)) == all) return v;
        return std::nullopt;
    }

    bool is_connected() const {
        VertexMask reach = 1;
        for (;;) {
            VertexMask next = reach;
            VertexMask frontier = reach;
            while (frontier) {
                const int v = std::countr_zero(frontier);
                frontier &= static_cast<VertexMask>(frontier - 1);
                next |= adjacency_[v];
            }
            if (next == reach) break;
            reach = next;
        }
        return reach == full_vertex_mask();
    }

    int cyclomatic_number() const {
        if (!is_connected()) fail(errc::not_connected, "cyclomatic number requires a connected graph");
        return edge_count() - n_ + 1;
    }

    Graph with_edge(int u, int v) const {
        if (u > v) std::swap(u, v);
        std::vector<Edge> edges = edges_;
        Edge e{static_cast<std::uint8_t>(u), static_cast<std::uint8_t>(v)};
        edges.insert(std::upper_bound(edges.begin(), edges.end(), e), e);
        return Graph(n_, std::move(edges));
    }

    Graph without_edge(int index) const {
        std::vector<Edge> edges = edges_;
        edges.erase(edges.begin() + index);
        return Graph(n_, std::move(edges));
    }

    // One graph per non-edge; K_n yields the empty list.
    std::vector<Graph> successors() const {
        std::vector<Graph> out;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (!has_edge(u, v)) out.push_back(with_edge(u, v));
        return out;
    }

    // Missing edges as pairs, in lexicographic order.
    std::vector<std::pair<int, int>> non_edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (!has_edge(u, v)) out.emplace_back(u, v);
        return out;
    }

    // One graph per edge whose removal keeps the graph connected.
    std::vector<Graph> predecessors() const {
        std::vector<Graph> out;
        for (int i = 0; i < edge_count(); ++i) {
            Graph h = without_edge(i);
            if (h.is_connected()) out.push_back(std::move(h));
        }
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
        adjacency_.fill(0);
        for (const Edge& e : edges_) {
            adjacency_[e.u] |= static_cast<VertexMask>(VertexMask{1} << e.v);
            adjacency_[e.v] |= static_cast<VertexMask>(VertexMask{1} << e.u);
        }
    }

    int n_ = 1;
    std::vector<Edge> edges_;
    std::array<VertexMask, kMaxVertices> adjacency_{};
};

inline Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.push_back({static_cast<std::uint8_t>(u), static_cast<std::uint8_t>(v)});
    return Graph::from_sorted_edges(n, std::move(edges));
}

inline Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int v = 0; v < n; ++v) pairs.emplace_back(v, (v + 1) % n);
    return Graph::from_edge_list(n, pairs);
}

inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int v = 0; v + 1 < n; ++v) pairs.emplace_back(v, v + 1);
    return Graph::from_edge_list(n, pairs);
}

inline Graph star_graph(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int v = 1; v < n; ++v) pairs.emplace_back(0, v);
    return Graph::from_edge_list(n, pairs);
}

}  // namespace mstci
