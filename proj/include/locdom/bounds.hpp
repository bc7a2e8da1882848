#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "locdom/graph.hpp"
#include "locdom/rational.hpp"

namespace locdom {

struct BoundCandidate {
    std::string name;
    Rational value{0};
    // (hypothesis name, holds for this graph)
    std::vector<std::pair<std::string, bool>> hypotheses;
    // True iff every hypothesis holds.
    bool applicable = false;
};

struct BoundReport {
    int n = 0;
    int delta = 0;
    int big_delta = 0;
    // Absent for acyclic graphs.
    std::optional<int> girth_value;
    std::optional<Rational> alpha_achieved;
    std::vector<BoundCandidate> ld_upper_candidates;
    std::vector<BoundCandidate> id_upper_candidates;
    Rational ld_lower{0};
    Rational id_lower{0};
};

// Evaluates every upper-bound formula in exact rational arithmetic, flagging
// each with its hypothesis checks. The alpha-dependent rows use the supplied
// cover density; without one they fall back to alpha = 1 (every graph has
// the all-singletons cover) and are marked inapplicable.
BoundReport upper_bounds(const Graph& g, std::optional<Rational> alpha = std::nullopt);

// (ceil(2n/(Delta+3)), ceil(2n/(Delta+2))). Throws when Delta < 1.
std::pair<int, int> lower_bounds(int n, int big_delta);

}  // namespace locdom
