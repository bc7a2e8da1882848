#include "locdom/bounds.hpp"

#include <stdexcept>

namespace locdom {

namespace {

BoundCandidate make_candidate(std::string name, Rational value,
                              std::vector<std::pair<std::string, bool>> hypotheses) {
    BoundCandidate c;
    c.name = std::move(name);
    c.value = value;
    c.applicable = true;
    for (const auto& [_, met] : hypotheses)
        if (!met) c.applicable = false;
    c.hypotheses = std::move(hypotheses);
    return c;
}

}  // namespace

BoundReport upper_bounds(const Graph& g, std::optional<Rational> alpha) {
    BoundReport r;
    r.n = g.order();
    const auto prof = degree_profile(g);
    r.delta = prof.min_degree;
    r.big_delta = prof.max_degree;
    r.girth_value = girth(g);
    r.alpha_achieved = alpha;

    const std::int64_t n = g.order();
    const bool girth5 = !r.girth_value.has_value() || *r.girth_value >= 5;
    const bool min_deg2 = r.delta >= 2;
    const bool cubic_connected =
        r.delta == 3 && r.big_delta == 3 && g.order() > 0 && is_connected(g);
    const bool identifiable = is_identifiable(g).identifiable;
    const bool alpha_known = alpha.has_value();
    const Rational a = alpha.value_or(Rational(1));

    r.ld_upper_candidates = {
        make_candidate("n/2", Rational(n, 2), {{"girth>=5", girth5}, {"min-degree>=2", min_deg2}}),
        make_candidate("(2+4alpha)n/5", (Rational(2) + Rational(4) * a) * Rational(n) / Rational(5),
                       {{"girth>=5", girth5}, {"alpha-known", alpha_known}}),
        make_candidate("22n/45", Rational(22 * n, 45),
                       {{"girth>=5", girth5}, {"cubic-connected", cubic_connected}}),
    };
    r.id_upper_candidates = {
        make_candidate("5n/7", Rational(5 * n, 7),
                       {{"girth>=5", girth5},
                        {"min-degree>=2", min_deg2},
                        {"identifiable", identifiable}}),
        make_candidate("(3+4alpha)n/5", (Rational(3) + Rational(4) * a) * Rational(n) / Rational(5),
                       {{"girth>=5", girth5},
                        {"identifiable", identifiable},
                        {"alpha-known", alpha_known}}),
        make_candidate("31n/45", Rational(31 * n, 45),
                       {{"girth>=5", girth5}, {"cubic-connected", cubic_connected}}),
    };
    r.ld_lower = Rational(2 * n, r.big_delta + 3);
    r.id_lower = Rational(2 * n, r.big_delta + 2);
    return r;
}

std::pair<int, int> lower_bounds(int n, int big_delta) {
    if (big_delta < 1)
        throw std::invalid_argument("lower_bounds: requires max degree >= 1, got " +
                                    std::to_string(big_delta));
    const Rational ld(2 * static_cast<std::int64_t>(n), big_delta + 3);
    const Rational id(2 * static_cast<std::int64_t>(n), big_delta + 2);
    return {static_cast<int>(ld.ceil()), static_cast<int>(id.ceil())};
}

}  // namespace locdom
