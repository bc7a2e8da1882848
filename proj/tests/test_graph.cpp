#include <random>
#include <stdexcept>

#include "doctest.h"
#include "locdom/families.hpp"
#include "locdom/graph.hpp"
#include "test_util.hpp"

using namespace locdom;

TEST_CASE("graph rejects malformed edges") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{-1, 0}}), std::invalid_argument);
}

TEST_CASE("adjacency and neighborhoods") {
    const Graph g(5, {{0, 1}, {0, 2}, {1, 3}, {3, 4}});
    CHECK(g.order() == 5);
    CHECK(g.edge_count() == 4);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 3));
    CHECK(g.degree(0) == 2);
    CHECK(g.degree(4) == 1);
    CHECK(g.neighbors(1) == std::vector<int>{0, 3});

    const Bitset closed = g.closed_neighborhood(1);
    CHECK(closed.test(0));
    CHECK(closed.test(1));
    CHECK(closed.test(3));
    CHECK_FALSE(closed.test(2));
    const Bitset open = g.open_neighborhood(1);
    CHECK_FALSE(open.test(1));
    CHECK(open.test(0));
}

TEST_CASE("vertex set basics") {
    VertexSet s(6, {4, 1});
    CHECK(s.size() == 2);
    s.insert(1);
    CHECK(s.size() == 2);
    s.erase(4);
    s.erase(4);
    CHECK(s.size() == 1);
    CHECK(s.to_vector() == std::vector<int>{1});
    CHECK(s == VertexSet::of(6, {1}));
    CHECK(s != VertexSet(6));
}

TEST_CASE("degree profile") {
    const DegreeProfile p = degree_profile(Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
    CHECK(p.min_degree == 2);
    CHECK(p.max_degree == 2);
    CHECK(p.degrees == std::vector<int>{2, 2, 2, 2});
}

TEST_CASE("girth on known graphs") {
    CHECK(girth(cycle(5)) == 5);
    CHECK(girth(cycle(9)) == 9);
    CHECK(girth(petersen()) == 5);
    CHECK(girth(heawood()) == 6);
    CHECK(girth(Graph(4, {{0, 1}, {1, 2}, {2, 3}})) == std::nullopt);
    CHECK(girth(Graph(1, {})) == std::nullopt);
    CHECK(girth(Graph(3, {{0, 1}, {1, 2}, {2, 0}})) == 3);
}

TEST_CASE("girth matches edge-deletion reference on random graphs") {
    std::mt19937 rng(71);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 2 + int(rng() % 9);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 4 == 0) edges.emplace_back(u, v);
        const Graph g(n, edges);
        CHECK(girth(g) == testutil::naive_girth(g));
    }
}

TEST_CASE("connectivity") {
    CHECK(is_connected(cycle(7)));
    CHECK(is_connected(Graph(1, {})));
    CHECK_FALSE(is_connected(Graph(2, {})));
    CHECK_FALSE(is_connected(Graph(4, {{0, 1}, {2, 3}})));
    CHECK(is_connected(Graph(0, {})));
}

TEST_CASE("twin detection") {
    CHECK(is_identifiable(cycle(5)).identifiable);
    CHECK(is_identifiable(petersen()).identifiable);

    // Adjacent twins: both endpoints of an edge in K3.
    const TwinCheck k3 = is_identifiable(Graph(3, {{0, 1}, {1, 2}, {2, 0}}));
    CHECK_FALSE(k3.identifiable);
    CHECK(k3.twins == std::pair<int, int>{0, 1});

    // Twins always share an edge, so K2 is the smallest non-identifiable graph
    // and the path on three vertices is fine.
    const TwinCheck k2 = is_identifiable(Graph(2, {{0, 1}}));
    CHECK_FALSE(k2.identifiable);
    CHECK(k2.twins == std::pair<int, int>{0, 1});
    CHECK(is_identifiable(Graph(3, {{0, 1}, {1, 2}})).identifiable);

    // Girth >= 5 with minimum degree >= 2 has no twins.
    std::mt19937 rng(72);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = random_girth5_graph(5 + int(rng() % 12), rng, true);
        CHECK(is_identifiable(g).identifiable);
    }
}

TEST_CASE("dot output highlights the chosen set") {
    const Graph g(3, {{0, 1}, {1, 2}});
    const VertexSet h(3, {1});
    const std::string plain = to_dot(g);
    const std::string marked = to_dot(g, &h);
    CHECK(plain.find("graph") != std::string::npos);
    CHECK(plain.find("0 -- 1") != std::string::npos);
    CHECK(marked.find("filled") != std::string::npos);
}
