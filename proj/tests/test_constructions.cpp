#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <utility>

#include "doctest.h"
#include "locdom/codes.hpp"
#include "locdom/constructions.hpp"
#include "locdom/families.hpp"
#include "locdom/graph.hpp"
#include "locdom/pathcover.hpp"
#include "test_util.hpp"

using namespace locdom;

namespace {

Graph chain_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

std::vector<int> run(int first, int count) {
    std::vector<int> out(count);
    std::iota(out.begin(), out.end(), first);
    return out;
}

PathCover cover_of(int graph_order, std::vector<std::vector<int>> paths) {
    PathCover s;
    s.graph_order = graph_order;
    s.paths = std::move(paths);
    return s;
}

PathCover single_path_cover(int n) { return cover_of(n, {run(0, n)}); }

}  // namespace

TEST_CASE("cover statistics") {
    PathCover s;
    int next = 0;
    for (int r : {1, 3, 5, 11}) {
        s.paths.push_back(run(next, r));
        next += r;
    }
    s.graph_order = next;
    const CoverStats st = cover_stats_of(s);
    CHECK(st.path_count == 4);
    CHECK(st.alpha == Rational(1, 5));
    CHECK(st.mod_classes == std::array<int, 5>{1, 2, 0, 1, 0});
    CHECK(st.small_orders == std::array<int, 10>{1, 1, 0, 1, 0, 1, 0, 0, 0, 0});
}

TEST_CASE("ld base pattern on single chains") {
    auto code_of = [](int n) {
        return ld_from_cover(chain_graph(n), single_path_cover(n)).code.to_vector();
    };
    CHECK(code_of(5) == std::vector<int>{1, 3});
    CHECK(code_of(6) == std::vector<int>{1, 3, 5});
    CHECK(code_of(4) == std::vector<int>{1, 3});
    CHECK(code_of(7) == std::vector<int>{1, 3, 5});
    CHECK(code_of(8) == std::vector<int>{1, 3, 5, 6});

    const ConstructionResult r = ld_from_cover(chain_graph(5), single_path_cover(5));
    CHECK(r.method == "d-of-s");
    CHECK(r.bound_claim == Rational(14, 5));
    CHECK(r.hypotheses_met);
    CHECK_FALSE(r.repaired);
    CHECK(Rational(r.code.size()) <= r.bound_claim);

    const ConstructionResult four = ld_from_cover(chain_graph(4), single_path_cover(4));
    CHECK(four.f_assignments == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("ld construction rejects short girth") {
    CHECK_THROWS_WITH_AS(ld_from_cover(cycle(4), single_path_cover(4)),
                         doctest::Contains("requires girth >= 5"), std::invalid_argument);
}

TEST_CASE("ld_from_cover is valid whatever the cover orientation") {
    std::mt19937 rng(78);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = random_girth5_graph(1 + int(rng() % 16), rng);
        const PathCover s = random_cover(g, rng);
        const ConstructionResult r = ld_from_cover(g, s);
        CHECK(is_locating_dominating(g, r.code).ok());
        CHECK_FALSE(r.repaired);
        CHECK(Rational(r.code.size()) <= r.bound_claim);
    }
}

TEST_CASE("ld_half on the hexagon") {
    const ConstructionResult r = ld_half(cycle(6));
    CHECK(r.method == "ld-half");
    CHECK(r.code.to_vector() == std::vector<int>{1, 3, 5});
    CHECK(r.bound_claim == Rational(3));
    CHECK(r.hypotheses_met);
    CHECK_FALSE(r.repaired);
}

TEST_CASE("ld_half repairs outside its hypotheses") {
    const ConstructionResult r = ld_half(cycle(4));
    CHECK_FALSE(r.hypotheses_met);
    CHECK(r.repaired);
    CHECK(is_locating_dominating(cycle(4), r.code).ok());
}

TEST_CASE("id base pattern on single chains") {
    CHECK(id_cover_base(chain_graph(5), single_path_cover(5)).to_vector() ==
          std::vector<int>{1, 2, 3});
    CHECK(id_cover_base(chain_graph(1), single_path_cover(1)).to_vector() ==
          std::vector<int>{0});
    CHECK(id_cover_base(chain_graph(6), single_path_cover(6)).to_vector() ==
          std::vector<int>{1, 2, 3, 4});
    CHECK(id_cover_base(chain_graph(8), single_path_cover(8)).to_vector() ==
          std::vector<int>{1, 2, 3, 5, 6, 7});

    // The same positions also identify the 5-cycle.
    CHECK(is_identifying_code(cycle(5), id_cover_base(cycle(5), single_path_cover(5))).ok());
}

TEST_CASE("id base separates everything but 2-path pairs") {
    std::mt19937 rng(79);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = random_girth5_graph(5 + int(rng() % 10), rng, true);
        const PathCover s = random_cover(g, rng);
        const VertexSet base = id_cover_base(g, s);
        CHECK(testutil::naive_dominates(g, base));

        std::vector<std::pair<int, int>> two_pairs;
        for (const auto& p : s.paths)
            if (p.size() == 2) two_pairs.emplace_back(std::min(p[0], p[1]),
                                                      std::max(p[0], p[1]));
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v) {
                if (testutil::closed_trace(g, base, u) != testutil::closed_trace(g, base, v))
                    continue;
                CHECK(std::find(two_pairs.begin(), two_pairs.end(), std::pair{u, v}) !=
                      two_pairs.end());
            }
    }
}

TEST_CASE("order-2 path exchange glues lone pairs to the code") {
    const Graph g(7, {{0, 1}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}});
    const ConstructionResult r = id_from_cover(g, cover_of(7, {{0, 1}, run(2, 5)}));
    CHECK(r.method == "c-of-s-repaired");
    CHECK(r.code.to_vector() == std::vector<int>{1, 3, 4, 5, 6});
    CHECK_FALSE(r.repaired);
    CHECK(r.bound_claim == Rational(29, 5));
    CHECK(r.f_assignments == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
    CHECK(is_identifying_code(g, r.code).ok());
}

TEST_CASE("trailing-triple saving on a single chain") {
    const ConstructionResult r = id_from_cover(chain_graph(8), single_path_cover(8));
    CHECK(r.code.to_vector() == std::vector<int>{1, 2, 3, 5, 7});
    CHECK_FALSE(r.repaired);
    CHECK(is_identifying_code(chain_graph(8), r.code).ok());
}

TEST_CASE("id_from_cover guards its hypotheses") {
    CHECK_THROWS_WITH_AS(id_from_cover(cycle(4), single_path_cover(4)),
                         doctest::Contains("requires girth >= 5"), std::invalid_argument);
    // Twins under girth >= 5 force a K2 component; K2 is acyclic so only the
    // twin guard can reject it.
    const Graph k2(2, {{0, 1}});
    CHECK_THROWS_WITH_AS(id_from_cover(k2, cover_of(2, {{0, 1}})),
                         doctest::Contains("twins"), std::invalid_argument);
}

TEST_CASE("id_from_cover stays within its bound on random instances") {
    std::mt19937 rng(80);
    int repairs = 0;
    for (int trial = 0; trial < 80; ++trial) {
        const Graph g = random_girth5_graph(5 + int(rng() % 12), rng, true);
        const PathCover s = random_cover(g, rng);
        const ConstructionResult r = id_from_cover(g, s);
        CHECK(is_identifying_code(g, r.code).ok());
        CHECK(Rational(r.code.size()) <= r.bound_claim);
        repairs += r.repaired ? 1 : 0;
    }
    // The exchange and saving steps are designed to need no patching.
    CHECK(repairs == 0);
}

TEST_CASE("five sevenths construction on cycles") {
    const ConstructionResult c8 = id_five_sevenths(cycle(8));
    CHECK(c8.method == "id-5/7");
    CHECK(c8.code.to_vector() == std::vector<int>{0, 2, 4, 6});
    CHECK_FALSE(c8.repaired);

    const ConstructionResult c7 = id_five_sevenths(cycle(7));
    CHECK(c7.code.size() == 5);
    CHECK_FALSE(c7.repaired);
    CHECK(is_identifying_code(cycle(7), c7.code).ok());

    const ConstructionResult c9 = id_five_sevenths(cycle(9));
    CHECK(c9.code.size() <= 6);
    CHECK_FALSE(c9.repaired);
    CHECK(is_identifying_code(cycle(9), c9.code).ok());
}

TEST_CASE("five sevenths construction on named graphs") {
    for (const Graph& g : {petersen(), flower(5, 2), flower(6, 2), heawood(), g12(), p11()}) {
        const ConstructionResult r = id_five_sevenths(g);
        CHECK(r.hypotheses_met);
        CHECK_FALSE(r.repaired);
        CHECK(is_identifying_code(g, r.code).ok());
        CHECK(r.code.size() <= (5 * g.order()) / 7);
    }
}

TEST_CASE("five sevenths tolerates degree-1 vertices by repair fallback") {
    const ConstructionResult r = id_five_sevenths(chain_graph(7));
    CHECK_FALSE(r.hypotheses_met);
    CHECK(is_identifying_code(chain_graph(7), r.code).ok());
}

TEST_CASE("verify_or_repair") {
    const Graph c7 = cycle(7);
    const VertexSet start(7, {0, 1, 2, 3});
    const VertexSet fixed = verify_or_repair(c7, start, Mode::LocatingDominating);
    CHECK(is_locating_dominating(c7, fixed).ok());
    for (int v : start.to_vector()) CHECK(fixed.contains(v));

    auto valid_for = [](const Graph& g, const VertexSet& s, Mode mode) {
        switch (mode) {
            case Mode::Dominating: return dominates(g, s).ok();
            case Mode::LocatingDominating: return is_locating_dominating(g, s).ok();
            default: return is_identifying_code(g, s).ok();
        }
    };
    for (Mode mode : {Mode::Dominating, Mode::LocatingDominating, Mode::IdentifyingCode}) {
        const VertexSet built = verify_or_repair(petersen(), VertexSet(10), mode);
        CHECK(valid_for(petersen(), built, mode));
    }

    const Graph k3(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK_THROWS_AS(verify_or_repair(k3, VertexSet(3), Mode::IdentifyingCode),
                    std::invalid_argument);
}

TEST_CASE("constructions are deterministic") {
    const Graph g = g12();
    CHECK(ld_half(g).code == ld_half(g).code);
    CHECK(id_five_sevenths(g).code == id_five_sevenths(g).code);
}
