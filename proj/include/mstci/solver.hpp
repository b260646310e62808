#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "mstci/graph.hpp"
#include "mstci/spanning_tree.hpp"

namespace mstci {

struct SolveOptions {
    bool want_all_minimizers = false;
    bool allow_star_shortcut = true;
};

struct MstciResult {
    std::uint32_t intersection_number = 0;
    SpanningTree minimizer;
    std::optional<std::vector<SpanningTree>> all_minimizers;
    std::uint64_t trees_enumerated = 0;
    bool used_star_shortcut = false;
};

// Closed form for the star tree at a universal vertex: every chord (a,b)
// routes through the center, so chords at a common non-center vertex v
// pairwise intersect and nothing else does.
inline std::uint32_t star_formula(const Graph& g, int center) {
    const VertexMask others = static_cast<VertexMask>(g.full_vertex_mask() & ~(VertexMask{1} << center));
    if (g.neighbors(center) != others)
        fail(errc::not_universal, "vertex " + std::to_string(center) + " is not universal");
    std::uint32_t total = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (v == center) continue;
        const std::uint32_t d = static_cast<std::uint32_t>(g.degree(v));
        total += (d - 1) * (d - 2) / 2;
    }
    return total;
}

namespace detail {

// Pairwise intersections of the fundamental cycles of one tree, giving up
// once the count exceeds `limit` (returns limit+1 then). This is the inner
// loop of every scan; masks are tree-position bits so a pair test is one AND.
class IntersectionCounter {
public:
    explicit IntersectionCounter(const Graph& g) : g_(&g) {}

    std::uint32_t count(std::span<const std::uint8_t> tree_edges, std::uint32_t limit) {
        paths_.build(*g_, tree_edges);
        EdgeMask in_tree = 0;
        for (std::uint8_t i : tree_edges) in_tree |= edge_bit(i);
        int mu = 0;
        for (int i = 0; i < g_->edge_count(); ++i) {
            if (in_tree & edge_bit(i)) continue;
            const Edge& e = g_->edge(i);
            path_[mu++] = paths_.path_mask(e.u, e.v);
        }
        std::uint32_t count = 0;
        for (int i = 0; i + 1 < mu; ++i) {
            const std::uint16_t pi = path_[i];
            for (int j = i + 1; j < mu; ++j) count += (pi & path_[j]) != 0;
            if (count > limit) return limit + 1;
        }
        return count;
    }

private:
    const Graph* g_;
    TreePaths paths_;
    std::array<std::uint16_t, kMaxEdges> path_{};
};

}  // namespace detail

// Exact minimum of the pairwise cycle intersection count over all spanning
// trees. With the shortcut enabled and a universal vertex present the star
// tree is returned without enumeration; it is optimal for such graphs.
inline MstciResult solve_mstci(const Graph& g, SolveOptions opts = {}) {
    if (!g.is_connected()) fail(errc::not_connected, "MSTCI is defined for connected graphs");
    MstciResult result;
    if (opts.allow_star_shortcut && !opts.want_all_minimizers) {
        if (auto center = g.universal_vertex()) {
            result.intersection_number = star_formula(g, *center);
            result.minimizer = star_tree(g, *center);
            result.used_star_shortcut = true;
            return result;
        }
    }
    detail::IntersectionCounter counter(g);
    std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
    std::vector<SpanningTree> minimizers;
    std::uint64_t trees = 0;
    for_each_spanning_tree(g, [&](std::span<const std::uint8_t> tree_edges) {
        ++trees;
        // ties only matter when collecting every minimizer
        std::uint32_t limit = best;
        if (!opts.want_all_minimizers && best != std::numeric_limits<std::uint32_t>::max() && best > 0)
            limit = best - 1;
        const std::uint32_t c = counter.count(tree_edges, limit);
        if (c > limit || (c == best && !opts.want_all_minimizers)) return;
        if (c < best) {
            best = c;
            minimizers.clear();
        }
        minimizers.push_back(make_spanning_tree(tree_edges));
    });
    result.intersection_number = best;
    result.minimizer = minimizers.front();
    result.trees_enumerated = trees;
    if (opts.want_all_minimizers) result.all_minimizers = std::move(minimizers);
    return result;
}

inline std::uint32_t intersection_number(const Graph& g) {
    return solve_mstci(g).intersection_number;
}

}  // namespace mstci
