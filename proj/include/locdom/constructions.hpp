#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "locdom/codes.hpp"
#include "locdom/graph.hpp"
#include "locdom/pathcover.hpp"
#include "locdom/rational.hpp"

namespace locdom {

struct CoverStats {
    int path_count = 0;
    Rational alpha{0};
    // Paths counted by order mod 5.
    std::array<int, 5> mod_classes{};
    // Paths counted by order 1..9; slot 0 counts orders >= 10.
    std::array<int, 10> small_orders{};
};

CoverStats cover_stats_of(const PathCover& s);

struct ConstructionResult {
    VertexSet code;
    // One of "ld-half", "d-of-s", "id-5/7", "c-of-s-repaired".
    std::string method;
    CoverStats cover_stats;
    // Upper bound the method guarantees when hypotheses_met.
    Rational bound_claim{0};
    bool hypotheses_met = false;
    bool repaired = false;
    // Forced unique-dominator map of the final code: (x, f(x)) for every
    // non-code x with exactly one code neighbor. Diagnostic only.
    std::vector<std::pair<int, int>> f_assignments;
};

// Odd-position selection over a normalized cover of g. Valid LD set of size
// <= n/2 when girth >= 5 and min degree >= 2; repaired otherwise.
ConstructionResult ld_half(const Graph& g);

// Deterministic LD set from an explicit cover; valid for every girth->=5
// graph and every valid cover, size <= (2n + 4|S|)/5. Throws on girth < 5 or
// an invalid cover.
ConstructionResult ld_from_cover(const Graph& g, const PathCover& s);

// Per-order pattern selection over a normalized cover of g. Valid ID code of
// size <= 5n/7 when girth >= 5 and min degree >= 2; repaired otherwise.
// Throws when g has twins.
ConstructionResult id_five_sevenths(const Graph& g);

// ID code from an explicit cover: the base selection plus the repair steps
// that fix order-2 code components and save one vertex per order-(5k+3)
// path. Size <= (3n + 4|S|)/5. Throws on girth < 5, twins, or an invalid
// cover.
ConstructionResult id_from_cover(const Graph& g, const PathCover& s);

// The base selection of id_from_cover with no repair steps applied: it
// dominates, and every unseparated pair is the vertex pair of an order-2
// path. Exposed for property tests.
VertexSet id_cover_base(const Graph& g, const PathCover& s);

// Returns candidate unchanged when it satisfies mode; otherwise repeatedly
// adds the lowest-id vertex resolving the first reported violation. Throws
// in identifying-code mode when g has twins.
VertexSet verify_or_repair(const Graph& g, const VertexSet& candidate, Mode mode);

}  // namespace locdom
