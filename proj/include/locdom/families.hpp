#pragma once

#include <random>

#include "locdom/graph.hpp"

namespace locdom {

// Cycle on n >= 3 vertices, edges {i, i+1 mod n}.
Graph cycle(int n);

// k cycles of length `core` (5 or 6) sharing no vertices, each attached to a
// central hub (vertex 0) by one edge. Order core*k + 1.
Graph flower(int core, int k);

// The 3-regular girth-5 graph on 10 vertices, labeled so that 0..9 is a
// Hamiltonian path and {1,9} is an edge. Construction self-checks.
Graph petersen();

// petersen() with edge {0,1} subdivided by a new vertex (id 10).
Graph p11();

// k copies of p11(), each copy's degree-2 vertex joined to a shared hub
// (vertex 0). Order 11k + 1.
Graph g11(int k);

// 3-regular bipartite graph on 14 vertices, girth 6: the cycle 0..13 plus
// chords {0,5},{1,10},{2,7},{3,12},{4,9},{6,11},{8,13}.
Graph heawood();

// 3-regular graph on 12 vertices, girth 5: the cycle 0..11 plus chords
// {0,4},{1,8},{2,6},{3,10},{5,9},{7,11}.
Graph g12();

// Random graph with girth >= 5, deterministic for a given generator state.
// With require_min_degree_2 the sample is a random Hamiltonian cycle plus
// surviving chords (needs n >= 5); otherwise a sparse G(n,p) pruned of
// triangles and 4-cycles, so smaller degrees and disconnection occur.
Graph random_girth5_graph(int n, std::mt19937& rng, bool require_min_degree_2 = false);

}  // namespace locdom
