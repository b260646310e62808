#pragma once

#include <algorithm>
#include <unordered_set>
#include <vector>

#include "mstci/canonical.hpp"
#include "mstci/graph.hpp"

namespace mstci {

// Exactly one representative (the canonical form) per isomorphism class of
// connected graphs on n vertices, sorted by (edge count, canonical key).
//
// Incremental vertex extension: every connected graph on k+1 vertices is a
// connected graph on k vertices (drop a non-cut vertex, e.g. a leaf of any
// spanning tree) plus a new vertex attached to a non-empty neighbor set, so
// extending each canonical k-vertex representative by all non-empty subsets
// and deduplicating on canonical keys covers every class.
inline std::vector<Graph> generate_connected(int n) {
    if (n < 1 || n > 8) fail(errc::infeasible, "generation supports 1 <= n <= 8");
    std::vector<Graph> level = {Graph::from_edge_list(1, {})};
    for (int k = 1; k < n; ++k) {
        std::vector<Graph> next;
        std::unordered_set<std::uint64_t> seen;
        for (const Graph& g : level) {
            for (VertexMask nbrs = 1; nbrs < (1u << k); ++nbrs) {
                std::vector<Edge> edges = g.edges();
                VertexMask rest = nbrs;
                while (rest) {
                    const int v = std::countr_zero(rest);
                    rest &= static_cast<VertexMask>(rest - 1);
                    edges.push_back({static_cast<std::uint8_t>(v), static_cast<std::uint8_t>(k)});
                }
                std::sort(edges.begin(), edges.end());
                const Graph candidate = Graph::from_sorted_edges(k + 1, std::move(edges));
                const CanonicalKey key = canonical_key(candidate);
                if (seen.insert(key.bits).second) next.push_back(graph_from_key(key));
            }
        }
        level = std::move(next);
    }
    std::sort(level.begin(), level.end(), [](const Graph& a, const Graph& b) {
        if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
        return upper_triangle_bits(a) < upper_triangle_bits(b);
    });
    return level;
}

}  // namespace mstci
