#include <doctest.h>

#include "mstci/generate.hpp"
#include "mstci/graph.hpp"

using namespace mstci;

TEST_CASE("edge list construction normalizes and validates") {
    const Graph k3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3.vertex_count() == 3);
    CHECK(k3.edge_count() == 3);
    CHECK(k3.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});

    const Graph k4 = complete_graph(4);
    CHECK(k4.edge_count() == 6);

    // reversed pairs normalize to u < v
    const Graph g = Graph::from_edge_list(3, {{2, 0}, {1, 0}});
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(0, 1));

    CHECK_THROWS_AS(Graph::from_edge_list(4, {{0, 1}, {0, 1}}), Error);
    CHECK_THROWS_AS(Graph::from_edge_list(4, {{0, 1}, {1, 0}}), Error);
    CHECK_THROWS_AS(Graph::from_edge_list(4, {{2, 2}}), Error);
    CHECK_THROWS_AS(Graph::from_edge_list(4, {{0, 4}}), Error);
    CHECK_THROWS_AS(Graph::from_edge_list(0, {}), Error);
    CHECK_THROWS_AS(Graph::from_edge_list(17, {}), Error);
}

TEST_CASE("degrees and degree extremes") {
    CHECK(complete_graph(4).degrees() == std::vector<int>{3, 3, 3, 3});

    const Graph path = path_graph(3);
    CHECK(path.degrees() == std::vector<int>{1, 2, 1});
    CHECK(path.max_degree() == 2);
    CHECK(path.min_degree() == 1);

    const Graph star = star_graph(5);
    CHECK(star.max_degree() == 4);
    CHECK(star.min_degree() == 1);
}

TEST_CASE("connectivity") {
    CHECK(complete_graph(4).is_connected());
    CHECK_FALSE(Graph::from_edge_list(4, {{0, 1}, {2, 3}}).is_connected());
    CHECK(Graph::from_edge_list(1, {}).is_connected());
}

TEST_CASE("universal vertex") {
    CHECK(complete_graph(4).universal_vertex() == 0);
    CHECK_FALSE(cycle_graph(5).universal_vertex().has_value());

    // wheel: 4-cycle plus hub
    const Graph wheel = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}});
    CHECK(wheel.universal_vertex() == 4);
}

TEST_CASE("cyclomatic number") {
    CHECK(path_graph(5).cyclomatic_number() == 0);
    CHECK(complete_graph(4).cyclomatic_number() == 3);
    CHECK_THROWS_AS(Graph::from_edge_list(4, {{0, 1}, {2, 3}}).cyclomatic_number(), Error);
}

TEST_CASE("successors and predecessors") {
    CHECK(complete_graph(4).successors().empty());
    CHECK(cycle_graph(4).successors().size() == 2);
    CHECK(path_graph(4).predecessors().empty());
    CHECK(cycle_graph(4).predecessors().size() == 4);
    CHECK(complete_graph(4).predecessors().size() == 6);

    // duality: h in successors(g) iff g in predecessors(h), as edge sets
    const Graph g = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}});
    for (const Graph& h : g.successors()) {
        bool found = false;
        for (const Graph& back : h.predecessors()) found = found || back == g;
        CHECK(found);
    }
}

TEST_CASE("generated graphs satisfy the handshake and successor counts") {
    for (int n = 2; n <= 5; ++n) {
        for (const Graph& g : generate_connected(n)) {
            int sum = 0;
            for (int d : g.degrees()) sum += d;
            CHECK(sum == 2 * g.edge_count());
            CHECK(static_cast<int>(g.successors().size()) + g.edge_count() == n * (n - 1) / 2);
        }
    }
}
