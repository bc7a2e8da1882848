#pragma once

#include <random>
#include <string>
#include <vector>

#include "locdom/graph.hpp"
#include "locdom/rational.hpp"

namespace locdom {

// Vertex-disjoint path cover: the paths partition {0..graph_order-1} and each
// stored sequence walks along edges of the host graph. The stored order of
// each sequence is part of the data; constructions index into it.
struct PathCover {
    std::vector<std::vector<int>> paths;
    int graph_order = 0;
};

struct CoverCheck {
    bool ok = true;
    std::string detail;  // first violation, empty when ok
};

CoverCheck validate_cover(const Graph& g, const PathCover& s);

// Deterministic heuristic cover: repeatedly seed at the lowest unused vertex,
// extend at the back then at the front with the lowest-id unused neighbor,
// then repeatedly merge paths whose endpoints are adjacent. Paths are stored
// front = smaller endpoint, sorted by front id.
PathCover greedy_cover(const Graph& g);

// Random maximal cover for property tests: same scheme with rng-shuffled
// seeds and neighbor picks, no merge pass.
PathCover random_cover(const Graph& g, std::mt19937& rng);

// 2*(number of order-1 paths) + (number of order-3 paths).
int objective_ld(const PathCover& s);

// 4|T1 u T4| + 3|T2 u T3| + 2|T8 u T9| over order classes Ti.
int objective_id(const PathCover& s);

// |paths| / n.
Rational cover_alpha(const PathCover& s);

// Local search minimizing objective_ld. Output: valid cover on the same
// vertex partition, all orders <= 6 and never 1 or 3 unless present from the
// start, no strictly improving exchange move left: no order-1 path vertex or
// order-3 path end adjacent (in g) to a vertex of another path whose removal
// splits it into orders (p,q) admitting an improving re-attachment. Throws
// std::invalid_argument on an invalid cover.
PathCover normalize_ld(const Graph& g, const PathCover& s);

// Local search minimizing objective_id. Output: valid cover, all orders <= 9,
// closed under: end-of-{1,2,3,4,8,9}-path re-attachment moves onto bad
// (p,q)-vertices, merges of 2-/4-paths adjacent through their code ends, and
// rotations making the back vertex of an 8-/9-path that closes into a cycle
// one with a neighbor outside the path. 8-/9-path orientations fixed by the
// rotation step are preserved in the output. Throws std::invalid_argument on
// an invalid cover.
PathCover normalize_id(const Graph& g, const PathCover& s);

}  // namespace locdom
