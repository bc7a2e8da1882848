#include "locdom/constructions.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace locdom {

namespace {

bool girth_at_least_5(const Graph& g) {
    auto c = girth(g);
    return !c.has_value() || *c >= 5;
}

void require_girth5(const Graph& g, const char* who) {
    if (!girth_at_least_5(g))
        throw std::invalid_argument(std::string(who) + ": requires girth >= 5, got girth " +
                                    std::to_string(*girth(g)));
}

void require_identifiable(const Graph& g, const char* who) {
    auto tw = is_identifiable(g);
    if (!tw.identifiable)
        throw std::invalid_argument(std::string(who) + ": graph is not identifiable, vertices " +
                                    std::to_string(tw.twins->first) + " and " +
                                    std::to_string(tw.twins->second) + " are twins");
}

PathCover validated_canonical(const Graph& g, const PathCover& s, const char* who) {
    auto check = validate_cover(g, s);
    if (!check.ok) throw std::invalid_argument(std::string(who) + ": " + check.detail);
    PathCover t = s;
    for (auto& p : t.paths)
        if (p.front() > p.back()) std::reverse(p.begin(), p.end());
    std::sort(t.paths.begin(), t.paths.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return a.front() < b.front();
              });
    return t;
}

std::vector<std::pair<int, int>> forced_assignments(const Graph& g, const VertexSet& c) {
    std::vector<std::pair<int, int>> f;
    for (int v = 0; v < g.order(); ++v) {
        if (c.contains(v)) continue;
        int sole = -1;
        int count = 0;
        for (int u : g.neighbors(v))
            if (c.contains(u)) {
                sole = u;
                ++count;
            }
        if (count == 1) f.emplace_back(v, sole);
    }
    return f;
}

// Size of the component of start in the subgraph induced by c, counting no
// further than cap.
int component_size_capped(const Graph& g, const VertexSet& c, int start, int cap) {
    std::vector<int> stack{start};
    VertexSet seen(g.order());
    seen.insert(start);
    int size = 1;
    while (!stack.empty() && size < cap) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v)) {
            if (!c.contains(u) || seen.contains(u)) continue;
            seen.insert(u);
            if (++size >= cap) break;
            stack.push_back(u);
        }
    }
    return size;
}

VertexSet ld_cover_base(const PathCover& cover, int n) {
    VertexSet d(n);
    for (const auto& path : cover.paths) {
        const int p = static_cast<int>(path.size());
        const int k = p / 5;
        for (int b = 0; b < k; ++b) {
            d.insert(path[5 * b + 1]);
            d.insert(path[5 * b + 3]);
        }
        switch (p % 5) {
            case 1: d.insert(path[p - 1]); break;
            case 2: d.insert(path[p - 2]); break;
            case 3: d.insert(path[p - 3]), d.insert(path[p - 2]); break;
            case 4: d.insert(path[p - 3]), d.insert(path[p - 1]); break;
            default: break;
        }
    }
    return d;
}

// True when no vertex of the path has a neighbor on another path.
bool path_is_closed_component(const Graph& g, const std::vector<int>& path,
                              const std::vector<int>& path_of, int pi) {
    for (int v : path)
        for (int u : g.neighbors(v))
            if (path_of[u] != pi) return false;
    return true;
}

// Code positions for an 8-/9-path whose vertex set induces a closed cycle
// (possibly with long chords). For the 8-cycle an independent set of size 4
// works: the parity class avoiding any diameter chord's endpoints.
void insert_closed_cycle_pattern(const Graph& g, const std::vector<int>& path, VertexSet& c) {
    const int r = static_cast<int>(path.size());
    if (r == 8) {
        int chord_parity = -1;
        for (int i = 0; i < 4 && chord_parity < 0; ++i)
            if (g.adjacent(path[i], path[i + 4])) chord_parity = i % 2;
        for (int j = 0; j < 8; ++j)
            if (chord_parity < 0 ? j % 2 == 0 : j % 2 != chord_parity) c.insert(path[j]);
    } else {
        for (int j : {0, 1, 2, 4, 5, 6}) c.insert(path[j]);
    }
}

void insert_id_pattern(const std::vector<int>& path, VertexSet& c) {
    const int r = static_cast<int>(path.size());
    switch (r) {
        case 1: break;
        case 2: c.insert(path[1]); break;
        case 3: c.insert(path[1]), c.insert(path[2]); break;
        case 4: c.insert(path[0]), c.insert(path[3]); break;
        case 8:
            for (int j : {1, 2, 3, 6, 7}) c.insert(path[j]);
            break;
        case 9:
            for (int j : {1, 2, 3, 4, 7, 8}) c.insert(path[j]);
            break;
        default:
            for (int j = 1; j <= r - 2; ++j) c.insert(path[j]);
            break;
    }
}

CheckResult check_for_mode(const Graph& g, const VertexSet& c, Mode mode) {
    switch (mode) {
        case Mode::Dominating: return dominates(g, c);
        case Mode::LocatingDominating: return is_locating_dominating(g, c);
        default: return is_identifying_code(g, c);
    }
}

void finalize(const Graph& g, ConstructionResult& result, Mode mode) {
    if (!check_for_mode(g, result.code, mode).ok()) {
        result.code = verify_or_repair(g, result.code, mode);
        result.repaired = true;
    }
    result.f_assignments = forced_assignments(g, result.code);
}

}  // namespace

CoverStats cover_stats_of(const PathCover& s) {
    CoverStats st;
    st.path_count = static_cast<int>(s.paths.size());
    st.alpha = cover_alpha(s);
    for (const auto& p : s.paths) {
        const int r = static_cast<int>(p.size());
        st.mod_classes[r % 5]++;
        st.small_orders[r <= 9 ? r : 0]++;
    }
    return st;
}

ConstructionResult ld_half(const Graph& g) {
    const PathCover cover = normalize_ld(g, greedy_cover(g));
    ConstructionResult result;
    result.method = "ld-half";
    result.cover_stats = cover_stats_of(cover);
    result.bound_claim = Rational(g.order(), 2);
    result.code = VertexSet(g.order());
    for (const auto& path : cover.paths)
        for (std::size_t j = 1; j < path.size(); j += 2) result.code.insert(path[j]);
    result.hypotheses_met = girth_at_least_5(g) && degree_profile(g).min_degree >= 2;
    finalize(g, result, Mode::LocatingDominating);
    return result;
}

ConstructionResult ld_from_cover(const Graph& g, const PathCover& s) {
    require_girth5(g, "ld_from_cover");
    const PathCover cover = validated_canonical(g, s, "ld_from_cover");
    ConstructionResult result;
    result.method = "d-of-s";
    result.cover_stats = cover_stats_of(cover);
    result.bound_claim =
        Rational(2 * static_cast<std::int64_t>(g.order()) + 4 * result.cover_stats.path_count, 5);
    result.code = ld_cover_base(cover, g.order());
    result.hypotheses_met = true;
    finalize(g, result, Mode::LocatingDominating);
    return result;
}

ConstructionResult id_five_sevenths(const Graph& g) {
    require_identifiable(g, "id_five_sevenths");
    const PathCover cover = normalize_id(g, greedy_cover(g));
    ConstructionResult result;
    result.method = "id-5/7";
    result.cover_stats = cover_stats_of(cover);
    result.bound_claim = Rational(5 * static_cast<std::int64_t>(g.order()), 7);
    result.code = VertexSet(g.order());

    std::vector<int> path_of(g.order(), -1);
    for (int i = 0; i < static_cast<int>(cover.paths.size()); ++i)
        for (int v : cover.paths[i]) path_of[v] = i;
    for (int i = 0; i < static_cast<int>(cover.paths.size()); ++i) {
        const auto& path = cover.paths[i];
        const int r = static_cast<int>(path.size());
        if ((r == 8 || r == 9) && g.adjacent(path[0], path[r - 1]) &&
            path_is_closed_component(g, path, path_of, i))
            insert_closed_cycle_pattern(g, path, result.code);
        else
            insert_id_pattern(path, result.code);
    }

    result.hypotheses_met = girth_at_least_5(g) && degree_profile(g).min_degree >= 2;
    finalize(g, result, Mode::IdentifyingCode);
    return result;
}

VertexSet id_cover_base(const Graph& g, const PathCover& s) {
    const PathCover cover = validated_canonical(g, s, "id_cover_base");
    VertexSet c(g.order());
    for (const auto& path : cover.paths) {
        const int p = static_cast<int>(path.size());
        const int k = p / 5;
        for (int b = 0; b < k; ++b) {
            c.insert(path[5 * b + 1]);
            c.insert(path[5 * b + 2]);
            c.insert(path[5 * b + 3]);
        }
        switch (p % 5) {
            case 1: c.insert(path[k >= 1 ? p - 2 : 0]); break;
            case 2:
                if (k >= 1)
                    c.insert(path[p - 3]), c.insert(path[p - 2]);
                else
                    c.insert(path[0]), c.insert(path[1]);
                break;
            case 3:
                c.insert(path[p - 3]), c.insert(path[p - 2]), c.insert(path[p - 1]);
                break;
            case 4:
                c.insert(path[p - 4]), c.insert(path[p - 3]), c.insert(path[p - 2]);
                break;
            default: break;
        }
    }
    return c;
}

ConstructionResult id_from_cover(const Graph& g, const PathCover& s) {
    require_girth5(g, "id_from_cover");
    require_identifiable(g, "id_from_cover");
    const PathCover cover = validated_canonical(g, s, "id_from_cover");
    ConstructionResult result;
    result.method = "c-of-s-repaired";
    result.cover_stats = cover_stats_of(cover);
    result.bound_claim =
        Rational(3 * static_cast<std::int64_t>(g.order()) + 4 * result.cover_stats.path_count, 5);
    VertexSet c = id_cover_base(g, cover);

    // Order-2 paths put both vertices in the base code; when they form a
    // size-2 component, trade the non-designated vertex for an outside
    // neighbor of the designated one, which glues the pair to a larger
    // component.
    for (const auto& path : cover.paths) {
        if (path.size() != 2) continue;
        const int x0 = path[0], x1 = path[1];
        if (!c.contains(x0) || !c.contains(x1)) continue;
        if (component_size_capped(g, c, x0, 3) != 2) continue;
        int designated = x1, mate = x0;
        if (g.degree(x1) < 2) std::swap(designated, mate);
        int y = -1;
        for (int u : g.neighbors(designated))
            if (u != mate && !c.contains(u)) {
                y = u;
                break;
            }
        if (y < 0) continue;
        c.erase(mate);
        c.insert(y);
    }

    // Each order-(5k+3) path saves one of its three trailing code vertices.
    // All trailing triples leave the code before any case is decided, so a
    // code neighbor seen by a case test is never a vertex a later path
    // removes.
    std::vector<const std::vector<int>*> s3;
    for (const auto& path : cover.paths)
        if (path.size() % 5 == 3) s3.push_back(&path);
    for (const auto* path : s3) {
        const int p = static_cast<int>(path->size());
        c.erase((*path)[p - 3]), c.erase((*path)[p - 2]), c.erase((*path)[p - 1]);
    }
    auto has_code_neighbor = [&](int v) {
        for (int u : g.neighbors(v))
            if (c.contains(u)) return true;
        return false;
    };
    for (const auto* path : s3) {
        const int p = static_cast<int>(path->size());
        const int t0 = (*path)[p - 3], t1 = (*path)[p - 2], t2 = (*path)[p - 1];
        if (has_code_neighbor(t1) || has_code_neighbor(t2))
            c.insert(t1), c.insert(t2);
        else if (has_code_neighbor(t0))
            c.insert(t0), c.insert(t1);
        else
            c.insert(t0), c.insert(t2);
    }

    result.code = std::move(c);
    result.hypotheses_met = true;
    finalize(g, result, Mode::IdentifyingCode);
    return result;
}

VertexSet verify_or_repair(const Graph& g, const VertexSet& candidate, Mode mode) {
    if (mode == Mode::IdentifyingCode) require_identifiable(g, "verify_or_repair");
    VertexSet c = candidate;
    for (;;) {
        const CheckResult r = check_for_mode(g, c, mode);
        if (r.status == CheckStatus::Valid) return c;
        const Violation& v = *r.violation;
        if (v.kind == ViolationKind::UndominatedVertex) {
            c.insert(v.a);
            continue;
        }
        // Unseparated pair: the cheapest resolvers are the pair's closed (id)
        // or open (ld, plus the pair itself) neighborhood difference.
        Bitset resolvers = mode == Mode::IdentifyingCode
                               ? g.closed_neighborhood(v.a) ^ g.closed_neighborhood(v.b)
                               : g.open_neighborhood(v.a) ^ g.open_neighborhood(v.b);
        if (mode != Mode::IdentifyingCode) {
            resolvers.set(v.a);
            resolvers.set(v.b);
        }
        c.insert(resolvers.find_first());
    }
}

}  // namespace locdom
