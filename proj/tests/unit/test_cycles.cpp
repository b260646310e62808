#include <doctest.h>

#include <bit>
#include <random>

#include "mstci/tree_cycles.hpp"

#include "corpus.hpp"

using namespace mstci;

namespace {

// K4 edge order: e0=(0,1) e1=(0,2) e2=(0,3) e3=(1,2) e4=(1,3) e5=(2,3)
const Graph k4 = complete_graph(4);
const SpanningTree k4_star = make_spanning_tree(std::array<std::uint8_t, 3>{0, 1, 2});
const SpanningTree k4_path = make_spanning_tree(std::array<std::uint8_t, 3>{0, 3, 5});

// pick the t-th spanning tree of g in enumeration order
SpanningTree random_tree(const Graph& g, std::mt19937_64& rng) {
    const auto trees = enumerate_spanning_trees(g);
    return trees[rng() % trees.size()];
}

}  // namespace

TEST_CASE("fundamental cycles of the hand-checked trees") {
    const FundamentalCycleSet star = fundamental_cycles(k4, k4_star);
    REQUIRE(star.size() == 3);
    // chords (1,2),(1,3),(2,3) run through the hub: masks {e0,e1},{e0,e2},{e1,e2}
    CHECK(star.cycles[0].chord_edge == 3);
    CHECK(star.cycles[0].tree_path == 0b011);
    CHECK(star.cycles[1].tree_path == 0b101);
    CHECK(star.cycles[2].tree_path == 0b110);

    const FundamentalCycleSet path = fundamental_cycles(k4, k4_path);
    REQUIRE(path.size() == 3);
    // chord (0,3) takes the whole path
    CHECK(path.cycles[1].chord_edge == 2);
    CHECK(path.cycles[1].tree_path == 0b111);

    // C4 minus one edge: the single chord uses all three tree edges
    const Graph c4 = cycle_graph(4);
    const auto trees = enumerate_spanning_trees(c4);
    for (const SpanningTree& t : trees) {
        const FundamentalCycleSet fcs = fundamental_cycles(c4, t);
        REQUIRE(fcs.size() == 1);
        CHECK(std::popcount(fcs.cycles[0].tree_path) == 3);
    }

    // triangle (0,1),(0,2),(1,2) is not a tree; short edge lists fail too
    CHECK_THROWS_AS(fundamental_cycles(k4, make_spanning_tree(std::array<std::uint8_t, 3>{0, 1, 3})), Error);
    CHECK_THROWS_AS(fundamental_cycles(c4, make_spanning_tree(std::array<std::uint8_t, 2>{0, 1})), Error);
}

TEST_CASE("intersection counts of the hand-checked trees") {
    CHECK(intersection_count(k4, k4_star) == 3);
    CHECK(intersection_count(k4, k4_path) == 3);
    for (int n = 3; n <= 7; ++n) {
        const Graph c = cycle_graph(n);
        for (const SpanningTree& t : enumerate_spanning_trees(c)) CHECK(intersection_count(c, t) == 0);
    }
}

TEST_CASE("cycle intersection matrix") {
    const auto m = cycle_intersection_matrix(k4, k4_star);
    REQUIRE(m.size() == 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(m[i][j] == (i == j ? 3 : 1));

    // mu = 1: a single 1x1 matrix holding the cycle length
    const Graph c5 = cycle_graph(5);
    const auto trees = enumerate_spanning_trees(c5);
    const auto m1 = cycle_intersection_matrix(c5, trees[0]);
    REQUIRE(m1.size() == 1);
    CHECK(m1[0][0] == 5);
}

TEST_CASE("off-diagonal support equals the intersection count") {
    std::mt19937_64 rng(7);
    for (int n = 4; n <= 7; ++n) {
        const auto& graphs = corpus(n);
        for (int rep = 0; rep < 40; ++rep) {
            const Graph& g = graphs[rng() % graphs.size()];
            const SpanningTree t = random_tree(g, rng);
            const auto m = cycle_intersection_matrix(g, t);
            int nonzero = 0;
            for (std::size_t i = 0; i < m.size(); ++i)
                for (std::size_t j = i + 1; j < m.size(); ++j) nonzero += m[i][j] != 0;
            CHECK(nonzero == intersection_count(g, t));
        }
    }
}

TEST_CASE("bonds of the hand-checked trees") {
    // C4 edge order: e0=(0,1) e1=(0,3) e2=(1,2) e3=(2,3); path tree = {e0,e2,e3}
    const Graph c4 = cycle_graph(4);
    const SpanningTree path = make_spanning_tree(std::array<std::uint8_t, 3>{0, 2, 3});
    REQUIRE(is_spanning_tree(c4, path));
    const BondSet bs = bonds(c4, path);
    // deleting (1,2) separates {0,1} from {2,3}: crossing edges (0,3),(1,2)
    CHECK(bs.edges_of(1) == std::vector<int>{1, 2});

    const BondSet star_bs = bonds(k4, k4_star);
    // deleting (0,1) leaves {1} vs rest: crossing edges (0,1),(1,2),(1,3)
    CHECK(star_bs.edges_of(0) == std::vector<int>{0, 3, 4});

    // every tree edge lies in its own bond
    for (int p = 0; p < star_bs.size(); ++p) CHECK((star_bs.bond[p] & edge_bit(k4_star.tree_edges[p])) != 0);

    // tree input: every bond is just its own edge
    const Graph t5 = path_graph(5);
    const SpanningTree self = enumerate_spanning_trees(t5)[0];
    const BondSet tb = bonds(t5, self);
    for (int p = 0; p < tb.size(); ++p) CHECK(tb.edges_of(p) == std::vector<int>{p});
}

TEST_CASE("thinned bonds partition the edges with the expected counts") {
    const Graph c4 = cycle_graph(4);
    const SpanningTree path = make_spanning_tree(std::array<std::uint8_t, 3>{0, 2, 3});
    const NonRedundantBondSet nb = non_redundant_bond_set(c4, path);
    CHECK(nb.chord_count == std::vector<int>{1, 0, 0});

    const NonRedundantBondSet star_nb = non_redundant_bond_set(k4, k4_star);
    CHECK(star_nb.chord_count == std::vector<int>{2, 1, 0});
    std::int64_t pairs = 0;
    for (int c : star_nb.chord_count) pairs += c * (c - 1) / 2;
    CHECK(pairs == 1);
    CHECK(pairs <= intersection_count(k4, k4_star));

    const Graph t5 = path_graph(5);
    const NonRedundantBondSet tree_nb = non_redundant_bond_set(t5, enumerate_spanning_trees(t5)[0]);
    CHECK(tree_nb.chord_count == std::vector<int>{0, 0, 0, 0});
}

TEST_CASE("bond and partition properties on random graph-tree pairs") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 300; ++rep) {
        const int n = 4 + static_cast<int>(rng() % 4);
        const auto& graphs = corpus(n);
        const Graph& g = graphs[rng() % graphs.size()];
        const SpanningTree t = random_tree(g, rng);
        const FundamentalCycleSet fcs = fundamental_cycles(g, t);
        std::uint16_t path_of[kMaxEdges] = {};
        for (const FundamentalCycle& c : fcs.cycles) path_of[c.chord_edge] = c.tree_path;

        const BondSet bs = bonds(g, t);
        for (int p = 0; p < bs.size(); ++p) {
            const auto members = bs.edges_of(p);
            // bond members that are chords pairwise intersect
            for (std::size_t a = 0; a < members.size(); ++a)
                for (std::size_t b = a + 1; b < members.size(); ++b) {
                    if ((t.edge_mask & edge_bit(members[a])) || (t.edge_mask & edge_bit(members[b]))) continue;
                    CHECK((path_of[members[a]] & path_of[members[b]]) != 0);
                }
        }
        // chords belong to exactly the bonds of their path, so at least two
        for (const FundamentalCycle& c : fcs.cycles) {
            std::uint16_t member_of = 0;
            for (int p = 0; p < bs.size(); ++p)
                if (bs.bond[p] & edge_bit(c.chord_edge)) member_of |= static_cast<std::uint16_t>(1u << p);
            CHECK(member_of == c.tree_path);
            CHECK(std::popcount(c.tree_path) >= 2);
        }

        const NonRedundantBondSet nb = non_redundant_bond_set(g, t);
        EdgeMask seen = 0;
        int total = 0;
        for (int p = 0; p < nb.size(); ++p) {
            CHECK((seen & nb.bond[p]) == 0);
            CHECK((nb.bond[p] & ~bs.bond[p]) == 0);  // thinned bond stays inside the bond
            seen |= nb.bond[p];
            total += nb.chord_count[p];
        }
        CHECK(edge_mask_count(seen) == g.edge_count());
        CHECK(total == g.cyclomatic_number());
        std::int64_t pairs = 0;
        for (int c : nb.chord_count) pairs += static_cast<std::int64_t>(c) * (c - 1) / 2;
        CHECK(pairs <= intersection_count(g, t));
    }
}
