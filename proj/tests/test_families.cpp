#include <random>
#include <stdexcept>

#include "doctest.h"
#include "locdom/families.hpp"
#include "locdom/graph.hpp"
#include "test_util.hpp"

using namespace locdom;

namespace {

bool girth_at_least_5(const Graph& g) {
    const auto gr = girth(g);
    return !gr.has_value() || *gr >= 5;
}

}  // namespace

TEST_CASE("cycle") {
    CHECK_THROWS_AS(cycle(2), std::invalid_argument);
    const Graph c7 = cycle(7);
    CHECK(c7.order() == 7);
    CHECK(c7.edge_count() == 7);
    CHECK(girth(c7) == 7);
    CHECK(is_connected(c7));
    const DegreeProfile p = degree_profile(c7);
    CHECK(p.min_degree == 2);
    CHECK(p.max_degree == 2);
}

TEST_CASE("flower") {
    CHECK_THROWS_AS(flower(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(flower(5, 1), std::invalid_argument);

    const Graph f52 = flower(5, 2);
    CHECK(f52.order() == 11);
    CHECK(girth(f52) == 5);
    CHECK(is_connected(f52));
    CHECK(degree_profile(f52).min_degree == 2);
    CHECK(f52.degree(0) == 2);

    const Graph f63 = flower(6, 3);
    CHECK(f63.order() == 19);
    CHECK(girth(f63) == 6);
    CHECK(f63.degree(0) == 3);
    CHECK(is_connected(f63));
}

TEST_CASE("petersen") {
    const Graph g = petersen();
    CHECK(g.order() == 10);
    CHECK(g.edge_count() == 15);
    CHECK(girth(g) == 5);
    CHECK(is_connected(g));
    const DegreeProfile p = degree_profile(g);
    CHECK(p.min_degree == 3);
    CHECK(p.max_degree == 3);
    // The labeling walks a Hamiltonian path 0..9.
    for (int i = 0; i + 1 < 10; ++i) CHECK(g.adjacent(i, i + 1));
}

TEST_CASE("subdivided petersen keeps girth 5") {
    const Graph g = p11();
    CHECK(g.order() == 11);
    CHECK(girth(g) == 5);
    CHECK(is_connected(g));
    CHECK(g.degree(10) == 2);
    CHECK(g.adjacent(0, 10));
    CHECK(g.adjacent(1, 10));
    CHECK_FALSE(g.adjacent(0, 1));
    for (int v = 0; v < 10; ++v) CHECK(g.degree(v) == 3);
}

TEST_CASE("hub of subdivided petersen copies") {
    const Graph two = g11(2);
    CHECK(two.order() == 23);
    CHECK(girth(two) == 5);
    CHECK(is_connected(two));
    CHECK(degree_profile(two).min_degree == 2);
    CHECK(degree_profile(two).max_degree == 3);
    CHECK(two.degree(0) == 2);

    // Three copies make the hub degree 3 and the whole graph cubic.
    const Graph three = g11(3);
    CHECK(three.order() == 34);
    CHECK(girth(three) == 5);
    CHECK(is_connected(three));
    CHECK(degree_profile(three).min_degree == 3);
    CHECK(degree_profile(three).max_degree == 3);

    CHECK_THROWS_AS(g11(1), std::invalid_argument);
}

TEST_CASE("order 14 cubic girth 6") {
    const Graph g = heawood();
    CHECK(g.order() == 14);
    CHECK(g.edge_count() == 21);
    CHECK(girth(g) == 6);
    CHECK(is_connected(g));
    CHECK(degree_profile(g).min_degree == 3);
    CHECK(degree_profile(g).max_degree == 3);
}

TEST_CASE("order 12 cubic girth 5") {
    const Graph g = g12();
    CHECK(g.order() == 12);
    CHECK(g.edge_count() == 18);
    CHECK(girth(g) == 5);
    CHECK(is_connected(g));
    CHECK(degree_profile(g).min_degree == 3);
    CHECK(degree_profile(g).max_degree == 3);
}

TEST_CASE("random girth-5 generator") {
    std::mt19937 rng(74);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = random_girth5_graph(1 + int(rng() % 20), rng);
        CHECK(girth_at_least_5(g));
    }
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = random_girth5_graph(5 + int(rng() % 16), rng, true);
        CHECK(girth_at_least_5(g));
        CHECK(degree_profile(g).min_degree >= 2);
    }
    CHECK_THROWS_AS(random_girth5_graph(-1, rng), std::invalid_argument);
    CHECK_THROWS_AS(random_girth5_graph(4, rng, true), std::invalid_argument);
}
