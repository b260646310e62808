#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "mstci/graph.hpp"

namespace mstci {

struct SpanningTree {
    std::vector<std::uint8_t> tree_edges;  // ascending indices into the graph edge list
    EdgeMask edge_mask = 0;

    friend bool operator==(const SpanningTree&, const SpanningTree&) = default;
};

inline SpanningTree make_spanning_tree(std::span<const std::uint8_t> edge_indices) {
    SpanningTree t;
    t.tree_edges.assign(edge_indices.begin(), edge_indices.end());
    for (std::uint8_t i : edge_indices) t.edge_mask |= edge_bit(i);
    return t;
}

// The tree of all edges at a universal vertex.
inline SpanningTree star_tree(const Graph& g, int center) {
    SpanningTree t;
    for (int i = 0; i < g.edge_count(); ++i)
        if (g.edge(i).u == center || g.edge(i).v == center) {
            t.tree_edges.push_back(static_cast<std::uint8_t>(i));
            t.edge_mask |= edge_bit(i);
        }
    return t;
}

inline bool is_spanning_tree(const Graph& g, const SpanningTree& t) {
    const int n = g.vertex_count();
    if (static_cast<int>(t.tree_edges.size()) != n - 1) return false;
    EdgeMask mask = 0;
    std::array<std::uint8_t, kMaxVertices> comp{};
    for (int v = 0; v < n; ++v) comp[v] = static_cast<std::uint8_t>(v);
    auto find = [&](int v) {
        while (comp[v] != v) v = comp[v];
        return v;
    };
    for (std::uint8_t i : t.tree_edges) {
        if (i >= g.edge_count()) return false;
        if (mask & edge_bit(i)) return false;
        mask |= edge_bit(i);
        const int a = find(g.edge(i).u), b = find(g.edge(i).v);
        if (a == b) return false;  // cycle
        comp[a] = static_cast<std::uint8_t>(b);
    }
    return mask == t.edge_mask;
}

inline void require_spanning_tree(const Graph& g, const SpanningTree& t) {
    if (!is_spanning_tree(g, t)) fail(errc::invalid_tree, "not a spanning tree of this graph");
}

// Number of spanning trees by the Laplacian cofactor, exact via Bareiss
// fraction-free elimination (intermediates are minors, well inside i128).
inline std::uint64_t spanning_tree_count(const Graph& g) {
    if (!g.is_connected()) fail(errc::not_connected, "spanning tree count requires a connected graph");
    const int n = g.vertex_count();
    if (n == 1) return 1;
    const int k = n - 1;
    std::array<std::array<__int128, kMaxVertices>, kMaxVertices> a{};
    for (int v = 0; v < k; ++v) a[v][v] = g.degree(v);
    for (const Edge& e : g.edges())
        if (e.u < k && e.v < k) {
            a[e.u][e.v] -= 1;
            a[e.v][e.u] -= 1;
        }
    __int128 prev = 1;
    for (int col = 0; col < k; ++col) {
        if (a[col][col] == 0) {
            int pivot = -1;
            for (int r = col + 1; r < k; ++r)
                if (a[r][col] != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return 0;
            for (int c = 0; c < k; ++c) std::swap(a[col][c], a[pivot][c]);
            for (int c = 0; c < k; ++c) a[col][c] = -a[col][c];
        }
        for (int r = col + 1; r < k; ++r) {
            for (int c = col + 1; c < k; ++c)
                a[r][c] = (a[r][c] * a[col][col] - a[r][col] * a[col][c]) / prev;
            a[r][col] = 0;
        }
        prev = a[col][col];
    }
    return static_cast<std::uint64_t>(a[k - 1][k - 1]);
}

namespace detail {

// Contraction/deletion enumeration. Each call site decides edge i: merging
// it contracts the endpoints, skipping it is allowed only while the still
// undecided edges can connect the remaining components (the bridge case is
// therefore forced). The invariant "contraction + undecided edges spans"
// holds on entry to every node, so every visited node yields at least one
// tree and each tree is emitted exactly once, in graph edge order.
template <class Fn>
class TreeEnumerator {
public:
    TreeEnumerator(const Graph& g, Fn& fn) : g_(g), fn_(fn), n_(g.vertex_count()), m_(g.edge_count()) {
        suffix_adj_.assign(m_ + 1, {});
        for (int i = m_ - 1; i >= 0; --i) {
            suffix_adj_[i] = suffix_adj_[i + 1];
            const Edge& e = g.edge(i);
            suffix_adj_[i][e.u] |= static_cast<VertexMask>(VertexMask{1} << e.v);
            suffix_adj_[i][e.v] |= static_cast<VertexMask>(VertexMask{1} << e.u);
        }
    }

    void run() {
        if (n_ == 1) {
            fn_(std::span<const std::uint8_t>{});
            return;
        }
        std::array<std::uint8_t, kMaxVertices> comp;
        std::array<VertexMask, kMaxVertices> comp_mask;
        for (int v = 0; v < n_; ++v) {
            comp[v] = static_cast<std::uint8_t>(v);
            comp_mask[v] = static_cast<VertexMask>(VertexMask{1} << v);
        }
        descend(0, 0, comp, comp_mask);
    }

private:
    void descend(int i, int chosen_count, std::array<std::uint8_t, kMaxVertices>& comp,
                 std::array<VertexMask, kMaxVertices>& comp_mask) {
        if (chosen_count == n_ - 1) {
            fn_(std::span<const std::uint8_t>(chosen_.data(), chosen_count));
            return;
        }
        while (comp[g_.edge(i).u] == comp[g_.edge(i).v]) ++i;  // cycle edges are never tree edges
        const int u = g_.edge(i).u, v = g_.edge(i).v;
        const std::uint8_t ru = comp[u], rv = comp[v];

        // include edge i: contract rv into ru
        auto comp2 = comp;
        auto mask2 = comp_mask;
        VertexMask moved = comp_mask[rv];
        mask2[ru] = static_cast<VertexMask>(comp_mask[ru] | moved);
        while (moved) {
            const int w = std::countr_zero(moved);
            moved &= static_cast<VertexMask>(moved - 1);
            comp2[w] = ru;
        }
        chosen_[chosen_count] = static_cast<std::uint8_t>(i);
        descend(i + 1, chosen_count + 1, comp2, mask2);

        // exclude edge i: only if the undecided suffix still spans
        if (spans_without(i, comp, comp_mask)) descend(i + 1, chosen_count, comp, comp_mask);
    }

    bool spans_without(int i, const std::array<std::uint8_t, kMaxVertices>& comp,
                       const std::array<VertexMask, kMaxVertices>& comp_mask) const {
        const VertexMask full = g_.full_vertex_mask();
        const auto& adj = suffix_adj_[i + 1];
        VertexMask reach = comp_mask[comp[0]];
        for (;;) {
            VertexMask next = reach;
            VertexMask scan = reach;
            while (scan) {
                const int w = std::countr_zero(scan);
                scan &= static_cast<VertexMask>(scan - 1);
                next |= adj[w];
            }
            VertexMask fresh = static_cast<VertexMask>(next & ~reach);
            while (fresh) {
                const int w = std::countr_zero(fresh);
                fresh &= static_cast<VertexMask>(fresh - 1);
                next |= comp_mask[comp[w]];
            }
            if (next == reach) return reach == full;
            if (next == full) return true;
            reach = next;
        }
    }

    const Graph& g_;
    Fn& fn_;
    int n_, m_;
    std::vector<std::array<VertexMask, kMaxVertices>> suffix_adj_;
    std::array<std::uint8_t, kMaxEdges> chosen_{};
};

}  // namespace detail

// Visits every spanning tree exactly once, deterministic order. fn receives
// the ascending tree edge indices, valid only during the call.
template <class Fn>
void for_each_spanning_tree(const Graph& g, Fn&& fn) {
    if (!g.is_connected()) fail(errc::not_connected, "spanning tree enumeration requires a connected graph");
    detail::TreeEnumerator<Fn> e(g, fn);
    e.run();
}

inline std::vector<SpanningTree> enumerate_spanning_trees(const Graph& g) {
    std::vector<SpanningTree> out;
    for_each_spanning_tree(g, [&](std::span<const std::uint8_t> edges) { out.push_back(make_spanning_tree(edges)); });
    return out;
}

// Rooted view of one spanning tree: parent pointers, depths and the tree
// position (0..n-2) of each vertex's parent edge. Tree-path masks over
// positions come out of lockstep climbs, one bit per hop.
class TreePaths {
public:
    void build(const Graph& g, std::span<const std::uint8_t> tree_edges) {
        const int n = g.vertex_count();
        std::array<VertexMask, kMaxVertices> tadj{};
        for (int p = 0; p < static_cast<int>(tree_edges.size()); ++p) {
            const Edge& e = g.edge(tree_edges[p]);
            tadj[e.u] |= static_cast<VertexMask>(VertexMask{1} << e.v);
            tadj[e.v] |= static_cast<VertexMask>(VertexMask{1} << e.u);
        }
        parent_[0] = 0;
        parent_pos_[0] = -1;
        depth_[0] = 0;
        std::array<std::uint8_t, kMaxVertices> queue;
        int head = 0, tail = 0;
        queue[tail++] = 0;
        VertexMask seen = 1;
        while (head < tail) {
            const int v = queue[head++];
            VertexMask rest = static_cast<VertexMask>(tadj[v] & ~seen);
            seen |= rest;
            while (rest) {
                const int w = std::countr_zero(rest);
                rest &= static_cast<VertexMask>(rest - 1);
                parent_[w] = static_cast<std::uint8_t>(v);
                depth_[w] = static_cast<std::uint8_t>(depth_[v] + 1);
                queue[tail++] = static_cast<std::uint8_t>(w);
            }
        }
        // tree position of the parent edge, resolved from the edge list
        for (int p = 0; p < static_cast<int>(tree_edges.size()); ++p) {
            const Edge& e = g.edge(tree_edges[p]);
            const int child = parent_[e.u] == e.v ? e.u : e.v;
            parent_pos_[child] = static_cast<std::int8_t>(p);
        }
        (void)n;
    }

    // Bit p set iff tree edge p lies on the unique u..v tree path.
    std::uint16_t path_mask(int u, int v) const {
        std::uint16_t mask = 0;
        while (depth_[u] > depth_[v]) {
            mask |= static_cast<std::uint16_t>(1u << parent_pos_[u]);
            u = parent_[u];
        }
        while (depth_[v] > depth_[u]) {
            mask |= static_cast<std::uint16_t>(1u << parent_pos_[v]);
            v = parent_[v];
        }
        while (u != v) {
            mask |= static_cast<std::uint16_t>(1u << parent_pos_[u]);
            mask |= static_cast<std::uint16_t>(1u << parent_pos_[v]);
            u = parent_[u];
            v = parent_[v];
        }
        return mask;
    }

    int parent(int v) const { return parent_[v]; }
    int depth(int v) const { return depth_[v]; }
    int parent_pos(int v) const { return parent_pos_[v]; }

private:
    std::array<std::uint8_t, kMaxVertices> parent_{};
    std::array<std::int8_t, kMaxVertices> parent_pos_{};
    std::array<std::uint8_t, kMaxVertices> depth_{};
};

}  // namespace mstci
