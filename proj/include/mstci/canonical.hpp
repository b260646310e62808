#pragma once

#include <algorithm>
#include <array>
#include <cstdint>

#include "mstci/graph.hpp"

namespace mstci {

// Canonical form of a graph on n <= 10 vertices: the lexicographically
// smallest upper-triangle bit string (column-major, same bit order as
// graph6) over all vertex relabelings. Two graphs are isomorphic iff
// their keys are equal. The n(n-1)/2 <= 45 bits pack into one word with
// the first pair in the most significant position, so lexicographic
// comparison is integer comparison.
struct CanonicalKey {
    std::uint8_t n = 0;
    std::uint64_t bits = 0;

    friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
    friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

// Upper-triangle bits of the adjacency matrix under the identity labeling,
// packed column-major with the first pair most significant. Comparing two
// values for the same n is exactly lexicographic graph6 comparison.
inline std::uint64_t upper_triangle_bits(const Graph& g) {
    std::uint64_t key = 0;
    for (int col = 1; col < g.vertex_count(); ++col)
        for (int row = 0; row < col; ++row) key = (key << 1) | (g.has_edge(row, col) ? 1u : 0u);
    return key;
}

namespace detail {

// Branch-and-bound over partial labelings. Placing position j fixes the
// j column bits against already-placed vertices; candidates are tried in
// ascending column order so the first leaf is a strong incumbent and
// larger prefixes cut off whole branches.
class Canonizer {
public:
    explicit Canonizer(const Graph& g) : n_(g.vertex_count()), total_bits_(n_ * (n_ - 1) / 2) {
        for (int v = 0; v < n_; ++v) adj_[v] = g.neighbors(v);
    }

    std::uint64_t run() {
        best_ = identity_key();
        placed_count_ = 0;
        used_ = 0;
        descend(0, 0);
        return best_;
    }

private:
    std::uint64_t identity_key() const {
        std::uint64_t key = 0;
        for (int col = 1; col < n_; ++col)
            for (int row = 0; row < col; ++row) key = (key << 1) | ((adj_[row] >> col) & 1u);
        return key;
    }

    void descend(std::uint64_t partial, int nbits_done) {
        const int level = placed_count_;
        if (level == n_) {
            if (partial < best_) best_ = partial;
            return;
        }
        struct Candidate {
            std::uint32_t column;
            std::uint8_t vertex;
        };
        std::array<Candidate, kMaxVertices> cand;
        int count = 0;
        for (int w = 0; w < n_; ++w) {
            if ((used_ >> w) & 1u) continue;
            std::uint32_t column = 0;
            for (int i = 0; i < level; ++i) column = (column << 1) | ((adj_[w] >> placed_[i]) & 1u);
            cand[count++] = {column, static_cast<std::uint8_t>(w)};
        }
        std::sort(cand.begin(), cand.begin() + count,
                  [](const Candidate& a, const Candidate& b) {
                      return a.column != b.column ? a.column < b.column : a.vertex < b.vertex;
                  });
        const int nbits = nbits_done + level;
        for (int k = 0; k < count; ++k) {
            const std::uint64_t next = (partial << level) | cand[k].column;
            // candidates are sorted, so the first too-large prefix ends the level
            if (next > (best_ >> (total_bits_ - nbits))) break;
            placed_[placed_count_++] = cand[k].vertex;
            used_ |= VertexMask{1} << cand[k].vertex;
            descend(next, nbits);
            used_ &= static_cast<VertexMask>(~(VertexMask{1} << cand[k].vertex));
            --placed_count_;
        }
    }

    int n_;
    int total_bits_;
    std::array<VertexMask, kMaxVertices> adj_{};
    std::array<std::uint8_t, kMaxVertices> placed_{};
    int placed_count_ = 0;
    VertexMask used_ = 0;
    std::uint64_t best_ = ~std::uint64_t{0};
};

}  // namespace detail

inline CanonicalKey canonical_key(const Graph& g) {
    if (g.vertex_count() > 10)
        fail(errc::unsupported, "canonical keys are exact only for n <= 10");
    if (g.vertex_count() == 1) return {1, 0};
    detail::Canonizer c(g);
    return {static_cast<std::uint8_t>(g.vertex_count()), c.run()};
}

inline Graph graph_from_key(const CanonicalKey& key) {
    const int n = key.n;
    const int total = n * (n - 1) / 2;
    std::vector<Edge> edges;
    int t = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++t)
            if ((key.bits >> (total - 1 - t)) & 1u)
                edges.push_back({static_cast<std::uint8_t>(row), static_cast<std::uint8_t>(col)});
    std::sort(edges.begin(), edges.end());
    return Graph::from_sorted_edges(n, std::move(edges));
}

inline Graph canonical_form(const Graph& g) {
    return graph_from_key(canonical_key(g));
}

inline bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_key(a) == canonical_key(b);
}

}  // namespace mstci
