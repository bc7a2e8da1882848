#pragma once

#include <chrono>
#include <cstdint>
#include <string>

#include "locdom/codes.hpp"
#include "locdom/graph.hpp"

namespace locdom {

enum class SolveStatus { Solved, TimedOut, NotIdentifiable };

std::string to_string(SolveStatus s);

struct SolveResult {
    SolveStatus status = SolveStatus::Solved;
    // Valid when status == Solved.
    int optimum = -1;
    // An optimal set when Solved; the best known valid set when TimedOut.
    VertexSet witness;
    std::uint64_t nodes_expanded = 0;
    // True iff the reported optimum is proved minimal.
    bool proved = false;
    // Proved lower bound; equals optimum when Solved.
    int lower = 0;
    // Size of the best known valid set; -1 when none is known.
    int upper = -1;
};

// Exact minimum dominating set / LD set / identifying code by iterative
// deepening over a hitting-set formulation. Deterministic: fixed vertex
// order (degree descending, id ascending), include-first DFS; the witness is
// the first optimum in that order. budget <= 0 means no time limit; on
// expiry the result carries the proved lower bound and best known upper
// bound instead. Throws for graphs with more than 1024 vertices.
SolveResult solve_minimum(const Graph& g, Mode mode,
                          std::chrono::milliseconds budget = std::chrono::milliseconds(0));

SolveResult min_dominating(const Graph& g);
SolveResult min_locating_dominating(const Graph& g);
SolveResult min_identifying_code(const Graph& g);

}  // namespace locdom
