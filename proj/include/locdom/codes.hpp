#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "locdom/graph.hpp"

namespace locdom {

enum class Mode { Dominating, LocatingDominating, IdentifyingCode };

std::string to_string(Mode m);

enum class ViolationKind {
    UndominatedVertex,   // witness: one vertex
    UnseparatedPair,     // witness: two vertices with equal signatures
    SizeTwoComponent,    // witness: the two code vertices of the component
    ForcedCollision,     // witness: two 1-dominated vertices sharing their dominator,
                         // or a 1-dominated vertex with its unusable dominator
};

std::string to_string(ViolationKind k);

struct Violation {
    ViolationKind kind;
    int a = -1;
    int b = -1;  // -1 when the witness is a single vertex
};

enum class CheckStatus {
    Valid,
    Invalid,
    Impossible,  // identifying codes only: the graph has twins
};

struct CheckResult {
    CheckStatus status = CheckStatus::Valid;
    std::optional<Violation> violation;
    bool ok() const { return status == CheckStatus::Valid; }
};

// |N[x] & d| capped at 2, for every vertex x. Shared by the validators: count
// >= 1 is domination, count == 1 marks the vertices that need a private
// dominator in the girth-5 characterizations.
std::vector<std::uint8_t> domination_census(const Graph& g, const VertexSet& d);

// Every vertex is in d or has a neighbor in d. Reports the lowest undominated
// vertex.
CheckResult dominates(const Graph& g, const VertexSet& d);

// Definitional check: d dominates and the sets N(x) & d are nonempty and
// pairwise distinct over x outside d. First violation by ascending witness.
CheckResult is_locating_dominating(const Graph& g, const VertexSet& d);

// Definitional check: d dominates and the sets N[x] & d are pairwise distinct
// over all x. Twins make this impossible for every d, which is reported as a
// distinguished status.
CheckResult is_identifying_code(const Graph& g, const VertexSet& c);

// Girth >= 5 characterization, O(n + m): d dominates and the 1-dominated
// vertices outside d have pairwise distinct dominators. Throws
// std::invalid_argument when girth(g) < 5.
CheckResult is_ld_girth5(const Graph& g, const VertexSet& d);

// Girth >= 5 characterization, O(n + m): c dominates, no connected component
// of G[c] has exactly 2 vertices, and the 1-dominated vertices outside c have
// pairwise distinct dominators, each lying in a component of G[c] of size
// >= 3. Throws std::invalid_argument when girth(g) < 5 or g has twins.
CheckResult is_id_girth5(const Graph& g, const VertexSet& c);

}  // namespace locdom
