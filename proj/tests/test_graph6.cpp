#include <random>
#include <string>

#include "doctest.h"
#include "locdom/families.hpp"
#include "locdom/graph6.hpp"
#include "test_util.hpp"

using namespace locdom;

namespace {

bool same_graph(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    for (int u = 0; u < a.order(); ++u)
        if (a.neighbors(u) != b.neighbors(u)) return false;
    return true;
}

}  // namespace

TEST_CASE("known encodings") {
    CHECK(encode_graph6(Graph(1, {})) == "@");
    CHECK(encode_graph6(Graph(3, {{0, 1}, {0, 2}, {1, 2}})) == "Bw");
    CHECK(encode_graph6(cycle(5)) == "Dhc");

    const Graph k1 = parse_graph6("@");
    CHECK(k1.order() == 1);
    CHECK(k1.edge_count() == 0);

    const Graph k3 = parse_graph6("Bw");
    CHECK(k3.order() == 3);
    CHECK(k3.edge_count() == 3);
    CHECK(k3.adjacent(0, 1));
    CHECK(k3.adjacent(0, 2));
    CHECK(k3.adjacent(1, 2));
}

TEST_CASE("optional header and surrounding whitespace") {
    const Graph g = parse_graph6(">>graph6<<Dhc");
    CHECK(same_graph(g, cycle(5)));
    CHECK(same_graph(parse_graph6("Dhc\n"), cycle(5)));
}

TEST_CASE("medium length header") {
    const Graph g = cycle(80);
    const std::string enc = encode_graph6(g);
    CHECK(enc[0] == '~');
    CHECK(same_graph(parse_graph6(enc), g));
}

TEST_CASE("malformed input is rejected with an offset") {
    CHECK_THROWS_AS(parse_graph6(""), Graph6Error);
    CHECK_THROWS_AS(parse_graph6("D"), Graph6Error);      // truncated edge data
    CHECK_THROWS_AS(parse_graph6("Dhcc"), Graph6Error);   // trailing byte
    CHECK_THROWS_AS(parse_graph6("B\x1f"), Graph6Error);  // byte below the graph6 alphabet
    CHECK_THROWS_AS(parse_graph6("Bz"), Graph6Error);     // nonzero padding bits

    try {
        parse_graph6("Dh");
        CHECK(false);
    } catch (const Graph6Error& e) {
        CHECK(e.offset == 2);
    }
}

TEST_CASE("roundtrip on random graphs is byte identical") {
    std::mt19937 rng(73);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + int(rng() % 70);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 5 == 0) edges.emplace_back(u, v);
        const Graph g(n, edges);
        const std::string enc = encode_graph6(g);
        const Graph back = parse_graph6(enc);
        CHECK(same_graph(g, back));
        CHECK(encode_graph6(back) == enc);
    }
}

TEST_CASE("empty graph of order zero") {
    const Graph g = parse_graph6(encode_graph6(Graph(0, {})));
    CHECK(g.order() == 0);
}
