#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "mstci/graph.hpp"
#include "mstci/spanning_tree.hpp"

namespace mstci {

// Fundamental cycle of one chord: the chord edge plus the tree path
// between its endpoints, the latter as a bit mask over tree positions.
struct FundamentalCycle {
    std::uint8_t chord_edge = 0;   // index into the graph edge list
    std::uint16_t tree_path = 0;   // bits over tree edge positions 0..n-2
};

struct FundamentalCycleSet {
    std::vector<FundamentalCycle> cycles;  // one per chord, ascending chord index

    int size() const { return static_cast<int>(cycles.size()); }
};

inline FundamentalCycleSet fundamental_cycles(const Graph& g, const SpanningTree& t) {
    require_spanning_tree(g, t);
    TreePaths paths;
    paths.build(g, t.tree_edges);
    FundamentalCycleSet out;
    for (int i = 0; i < g.edge_count(); ++i) {
        if (t.edge_mask & edge_bit(i)) continue;
        const Edge& e = g.edge(i);
        out.cycles.push_back({static_cast<std::uint8_t>(i), paths.path_mask(e.u, e.v)});
    }
    return out;
}

// Number of unordered chord pairs whose tree paths share an edge.
inline int intersection_count(const Graph& g, const SpanningTree& t) {
    const FundamentalCycleSet fcs = fundamental_cycles(g, t);
    int count = 0;
    for (int i = 0; i < fcs.size(); ++i)
        for (int j = i + 1; j < fcs.size(); ++j)
            count += (fcs.cycles[i].tree_path & fcs.cycles[j].tree_path) != 0;
    return count;
}

// Grammian of the unsigned cycle-edge incidence: entry (i,j) counts shared
// tree edges, the diagonal is the cycle length (tree path plus the chord).
inline std::vector<std::vector<int>> cycle_intersection_matrix(const Graph& g, const SpanningTree& t) {
    const FundamentalCycleSet fcs = fundamental_cycles(g, t);
    const int mu = fcs.size();
    std::vector<std::vector<int>> m(mu, std::vector<int>(mu, 0));
    for (int i = 0; i < mu; ++i) {
        m[i][i] = std::popcount(fcs.cycles[i].tree_path) + 1;
        for (int j = i + 1; j < mu; ++j) {
            m[i][j] = m[j][i] =
                std::popcount(static_cast<std::uint16_t>(fcs.cycles[i].tree_path & fcs.cycles[j].tree_path));
        }
    }
    return m;
}

// Bond of tree edge p: every graph edge crossing the bipartition that
// deleting p from the tree leaves behind. Indexed by tree position.
struct BondSet {
    std::vector<EdgeMask> bond;  // one mask over graph edges per tree position

    int size() const { return static_cast<int>(bond.size()); }

    std::vector<int> edges_of(int pos) const {
        std::vector<int> out;
        EdgeMask rest = bond[pos];
        while (rest) {
            out.push_back(edge_mask_lowest(rest));
            rest &= rest - 1;
        }
        return out;
    }
};

namespace detail {

// Vertices on the child side of a tree edge: those whose climb to the
// root passes through the deeper endpoint.
inline VertexMask split_side(const Graph& g, const TreePaths& paths, const Edge& e) {
    const int child = paths.parent(e.u) == e.v ? e.u : e.v;
    VertexMask side = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int w = v;
        while (paths.depth(w) > paths.depth(child)) w = paths.parent(w);
        if (w == child) side |= static_cast<VertexMask>(VertexMask{1} << v);
    }
    return side;
}

}  // namespace detail

inline BondSet bonds(const Graph& g, const SpanningTree& t) {
    require_spanning_tree(g, t);
    TreePaths paths;
    paths.build(g, t.tree_edges);
    BondSet out;
    out.bond.resize(t.tree_edges.size());
    for (int p = 0; p < static_cast<int>(t.tree_edges.size()); ++p) {
        const VertexMask side = detail::split_side(g, paths, g.edge(t.tree_edges[p]));
        EdgeMask crossing = 0;
        for (int i = 0; i < g.edge_count(); ++i) {
            const Edge& e = g.edge(i);
            if (((side >> e.u) & 1u) != ((side >> e.v) & 1u)) crossing |= edge_bit(i);
        }
        out.bond[p] = crossing;
    }
    return out;
}

// Thinned bonds partitioning the whole edge set: each tree edge keeps its
// own bond, and each chord goes to the first tree edge (lowest position)
// on its tree path. chord_count[p] is the bond size minus one.
struct NonRedundantBondSet {
    std::vector<EdgeMask> bond;
    std::vector<int> chord_count;

    int size() const { return static_cast<int>(bond.size()); }
};

inline NonRedundantBondSet non_redundant_bond_set(const Graph& g, const SpanningTree& t) {
    require_spanning_tree(g, t);
    TreePaths paths;
    paths.build(g, t.tree_edges);
    NonRedundantBondSet out;
    out.bond.resize(t.tree_edges.size());
    out.chord_count.assign(t.tree_edges.size(), 0);
    for (int p = 0; p < static_cast<int>(t.tree_edges.size()); ++p) out.bond[p] = edge_bit(t.tree_edges[p]);
    for (int i = 0; i < g.edge_count(); ++i) {
        if (t.edge_mask & edge_bit(i)) continue;
        const Edge& e = g.edge(i);
        const std::uint16_t path = paths.path_mask(e.u, e.v);
        const int p = std::countr_zero(path);
        out.bond[p] |= edge_bit(i);
        out.chord_count[p] += 1;
    }
    return out;
}

}  // namespace mstci
