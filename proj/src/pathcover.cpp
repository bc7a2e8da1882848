#include "locdom/pathcover.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <utility>

namespace locdom {

namespace {

int cost_ld(int r) { return r == 1 ? 2 : (r == 3 ? 1 : 0); }

int cost_id(int r) {
    if (r == 1 || r == 4) return 4;
    if (r == 2 || r == 3) return 3;
    if (r == 8 || r == 9) return 2;
    return 0;
}

// Piece orders for cutting an r-path, LD flavor: pieces from {2,4,5,6}, never
// creating orders 1 or 3. Identity below 7.
void ld_split_orders(int r, std::vector<int>& out) {
    while (r > 10) {
        out.push_back(6);
        r -= 6;
    }
    switch (r) {
        case 7: out.insert(out.end(), {5, 2}); break;
        case 8: out.insert(out.end(), {6, 2}); break;
        case 9: out.insert(out.end(), {5, 4}); break;
        case 10: out.insert(out.end(), {6, 4}); break;
        default: out.push_back(r); break;
    }
}

// ID flavor: r >= 10 becomes pieces from {5,6,7}, non-5 pieces leading.
// Identity below 10.
void id_split_orders(int r, std::vector<int>& out) {
    if (r < 10) {
        out.push_back(r);
        return;
    }
    switch (r % 5) {
        case 1: out.push_back(6), r -= 6; break;
        case 2: out.push_back(7), r -= 7; break;
        case 3: out.insert(out.end(), {6, 7}), r -= 13; break;
        case 4: out.insert(out.end(), {7, 7}), r -= 14; break;
        default: break;
    }
    for (; r > 0; r -= 5) out.push_back(5);
}

int split_cost(int r, bool ld) {
    std::vector<int> orders;
    ld ? ld_split_orders(r, orders) : id_split_orders(r, orders);
    int c = 0;
    for (int o : orders) c += ld ? cost_ld(o) : cost_id(o);
    return c;
}

void canonicalize(std::vector<int>& path) {
    if (path.front() > path.back()) std::reverse(path.begin(), path.end());
}

void cut_path(const std::vector<int>& path, bool ld, std::vector<std::vector<int>>& out) {
    std::vector<int> orders;
    ld ? ld_split_orders(static_cast<int>(path.size()), orders)
       : id_split_orders(static_cast<int>(path.size()), orders);
    auto it = path.begin();
    for (int o : orders) {
        out.emplace_back(it, it + o);
        it += o;
    }
}

// Mover path with its end z placed last, ready for appending a target path.
std::vector<int> with_end_last(const std::vector<int>& m, int z) {
    std::vector<int> out;
    if (m.back() == z)
        out = m;
    else
        out.assign(m.rbegin(), m.rend());
    return out;
}

void append_from(std::vector<int>& dst, const std::vector<int>& p, int first) {
    if (p.front() == first)
        dst.insert(dst.end(), p.begin(), p.end());
    else
        dst.insert(dst.end(), p.rbegin(), p.rend());
}

struct Workspace {
    const Graph& g;
    std::vector<std::vector<int>> paths;
    std::vector<int> path_of;
    std::vector<int> pos_of;

    Workspace(const Graph& graph, std::vector<std::vector<int>> ps)
        : g(graph), paths(std::move(ps)), path_of(g.order(), -1), pos_of(g.order(), -1) {
        for (auto& p : paths) canonicalize(p);
        sort_and_reindex();
    }

    void sort_and_reindex() {
        std::sort(paths.begin(), paths.end(),
                  [](const std::vector<int>& a, const std::vector<int>& b) {
                      return a.front() < b.front();
                  });
        for (int i = 0; i < static_cast<int>(paths.size()); ++i)
            for (int j = 0; j < static_cast<int>(paths[i].size()); ++j) {
                path_of[paths[i][j]] = i;
                pos_of[paths[i][j]] = j;
            }
    }

    void split_all(bool ld) {
        std::vector<std::vector<int>> next;
        for (auto& p : paths)
            cut_path(p, ld, next);
        for (auto& p : next) canonicalize(p);
        paths = std::move(next);
        sort_and_reindex();
    }

    // Removes paths a and b, adds the given replacement paths (each cut to
    // size and canonicalized).
    void replace_two(int a, int b, const std::vector<std::vector<int>>& pieces, bool ld) {
        std::vector<std::vector<int>> next;
        next.reserve(paths.size() + 2);
        for (int i = 0; i < static_cast<int>(paths.size()); ++i)
            if (i != a && i != b) next.push_back(std::move(paths[i]));
        for (const auto& piece : pieces)
            cut_path(piece, ld, next);
        for (auto& p : next)
            if (p.front() > p.back()) std::reverse(p.begin(), p.end());
        paths = std::move(next);
        sort_and_reindex();
    }
};

// One exchange move for the LD objective: mover = 1-path vertex or 3-path
// end z, target v on another path. Endpoint targets are joined; interior
// targets take the side split with the lower resulting objective. Only
// strictly improving moves fire.
bool try_ld_move(Workspace& w) {
    for (int mi = 0; mi < static_cast<int>(w.paths.size()); ++mi) {
        const int r = static_cast<int>(w.paths[mi].size());
        if (r != 1 && r != 3) continue;
        const std::vector<int> ends =
            r == 1 ? std::vector<int>{w.paths[mi][0]}
                   : std::vector<int>{w.paths[mi].front(), w.paths[mi].back()};
        for (int z : ends) {
            for (int v : w.g.neighbors(z)) {
                const int pi = w.path_of[v];
                if (pi == mi) continue;
                const auto& P = w.paths[pi];
                const int m = static_cast<int>(P.size());
                const int j = w.pos_of[v];
                if (j != 0 && j != m - 1) continue;
                if (split_cost(r + m, true) - cost_ld(r) - cost_ld(m) >= 0) continue;
                std::vector<int> merged = with_end_last(w.paths[mi], z);
                append_from(merged, P, v);
                w.replace_two(mi, pi, {merged}, true);
                return true;
            }
            for (int v : w.g.neighbors(z)) {
                const int pi = w.path_of[v];
                if (pi == mi) continue;
                const auto& P = w.paths[pi];
                const int m = static_cast<int>(P.size());
                const int j = w.pos_of[v];
                if (j == 0 || j == m - 1) continue;
                const int base = cost_ld(r) + cost_ld(m);
                const int da = split_cost(j + 1 + r, true) + cost_ld(m - 1 - j) - base;
                const int db = cost_ld(j) + split_cost(m - j + r, true) - base;
                if (da >= 0 && db >= 0) continue;
                if (da <= db) {
                    std::vector<int> a1(P.begin(), P.begin() + j + 1);
                    append_from(a1, w.paths[mi], z);
                    std::vector<int> a2(P.begin() + j + 1, P.end());
                    w.replace_two(mi, pi, {a1, a2}, true);
                } else {
                    std::vector<int> b1(P.begin(), P.begin() + j);
                    std::vector<int> b2 = with_end_last(w.paths[mi], z);
                    b2.insert(b2.end(), P.begin() + j, P.end());
                    w.replace_two(mi, pi, {b1, b2}, true);
                }
                return true;
            }
        }
    }
    return false;
}

bool id_mover_order(int r) {
    return r == 1 || r == 2 || r == 3 || r == 4 || r == 8 || r == 9;
}

// Classes whose vertices are not all selected by the per-order ID patterns.
bool id_bad_class(int p, int q) {
    if (p > q) std::swap(p, q);
    switch (p) {
        case 0: return q != 3;
        case 1: return q == 2;
        case 2: return q == 5 || q == 6;
        case 3: return q == 4 || q == 5;
        default: return false;
    }
}

bool try_id_move(Workspace& w) {
    for (int mi = 0; mi < static_cast<int>(w.paths.size()); ++mi) {
        const int r = static_cast<int>(w.paths[mi].size());
        if (!id_mover_order(r)) continue;
        const std::vector<int> ends =
            r == 1 ? std::vector<int>{w.paths[mi][0]}
                   : std::vector<int>{w.paths[mi].front(), w.paths[mi].back()};
        for (int z : ends) {
            for (int v : w.g.neighbors(z)) {
                const int pi = w.path_of[v];
                if (pi == mi) continue;
                const auto& P = w.paths[pi];
                const int m = static_cast<int>(P.size());
                const int j = w.pos_of[v];
                if (j != 0 && j != m - 1) continue;
                if (!id_bad_class(0, m - 1)) continue;
                if (split_cost(r + m, false) - cost_id(r) - cost_id(m) >= 0) continue;
                std::vector<int> merged = with_end_last(w.paths[mi], z);
                append_from(merged, P, v);
                w.replace_two(mi, pi, {merged}, false);
                return true;
            }
            for (int v : w.g.neighbors(z)) {
                const int pi = w.path_of[v];
                if (pi == mi) continue;
                const auto& P = w.paths[pi];
                const int m = static_cast<int>(P.size());
                const int j = w.pos_of[v];
                if (j == 0 || j == m - 1) continue;
                const int p = std::min(j, m - 1 - j);
                const int q = std::max(j, m - 1 - j);
                if (!id_bad_class(p, q)) continue;
                const int base = cost_id(r) + cost_id(m);
                const int d_left = split_cost(j + 1 + r, false) + cost_id(m - 1 - j) - base;
                const int d_right = cost_id(j) + split_cost(m - j + r, false) - base;
                const bool small_is_left = j < m - 1 - j;
                // Attaching along the larger piece is designated for 4-paths
                // and for a 2-path meeting a (1,2)-vertex; otherwise the
                // smaller piece. The designated side is not improving for a
                // handful of combinations, where the mirrored one is.
                const bool designate_big = r == 4 || (r == 2 && p == 1 && q == 2);
                const int d_desig = (designate_big != small_is_left) ? d_left : d_right;
                const int d_other = (designate_big != small_is_left) ? d_right : d_left;
                bool use_left;
                if (d_desig < 0)
                    use_left = designate_big != small_is_left;
                else if (d_other < 0)
                    use_left = designate_big == small_is_left;
                else
                    continue;
                if (use_left) {
                    std::vector<int> a1(P.begin(), P.begin() + j + 1);
                    append_from(a1, w.paths[mi], z);
                    std::vector<int> a2(P.begin() + j + 1, P.end());
                    w.replace_two(mi, pi, {a1, a2}, false);
                } else {
                    std::vector<int> b1(P.begin(), P.begin() + j);
                    std::vector<int> b2 = with_end_last(w.paths[mi], z);
                    b2.insert(b2.end(), P.begin() + j, P.end());
                    w.replace_two(mi, pi, {b1, b2}, false);
                }
                return true;
            }
        }
    }
    return false;
}

// Positions of a path's pattern-selected end vertices that can carry a
// 2-component of the induced code subgraph: the code end of a 2-path and
// both code ends of a 4-path.
std::vector<int> id_code_end_positions(int r) {
    if (r == 2) return {1};
    if (r == 4) return {0, 3};
    return {};
}

// Merges 2-/4-paths adjacent through their pattern code ends into a single
// 4-, 6- or 8-path. Always strictly improving.
bool try_id_component_merge(Workspace& w) {
    for (int pi = 0; pi < static_cast<int>(w.paths.size()); ++pi) {
        const int rp = static_cast<int>(w.paths[pi].size());
        for (int cp : id_code_end_positions(rp)) {
            const int z = w.paths[pi][cp];
            for (int v : w.g.neighbors(z)) {
                const int qi = w.path_of[v];
                if (qi == pi) continue;
                const int rq = static_cast<int>(w.paths[qi].size());
                const auto qpos = id_code_end_positions(rq);
                if (std::find(qpos.begin(), qpos.end(), w.pos_of[v]) == qpos.end()) continue;
                std::vector<int> merged = with_end_last(w.paths[pi], z);
                append_from(merged, w.paths[qi], v);
                w.replace_two(pi, qi, {merged}, false);
                return true;
            }
        }
    }
    return false;
}

// The ID pattern keeps the back vertex x_{r-1} of an 8-/9-path in the code;
// it needs a code neighbor beyond x_{r-2} or a neighbor off the path. When
// the path closes into a cycle, rotating it can grant the latter. Rotated
// paths keep their stored orientation from here on.
bool rotate_closed_89(Workspace& w) {
    for (int pi = 0; pi < static_cast<int>(w.paths.size()); ++pi) {
        auto& P = w.paths[pi];
        const int r = static_cast<int>(P.size());
        if (r != 8 && r != 9) continue;
        const int z = P.back();
        bool satisfied = false;
        for (int v : w.g.neighbors(z))
            if (w.path_of[v] != pi) {
                satisfied = true;
                break;
            }
        for (int i = 1; !satisfied && i <= r - 5; ++i)
            if (w.g.adjacent(z, P[i])) satisfied = true;
        if (satisfied) continue;
        if (!w.g.adjacent(z, P[0])) continue;
        int pivot = -1;
        for (int i = 0; i < r && pivot < 0; ++i)
            for (int v : w.g.neighbors(P[i]))
                if (w.path_of[v] != pi) {
                    pivot = i;
                    break;
                }
        if (pivot < 0) continue;  // closed component, handled by the pattern
        std::vector<int> rotated;
        rotated.reserve(r);
        for (int k = 1; k <= r; ++k) rotated.push_back(P[(pivot + k) % r]);
        P = std::move(rotated);
        w.sort_and_reindex();
        return true;
    }
    return false;
}

}  // namespace

CoverCheck validate_cover(const Graph& g, const PathCover& s) {
    if (s.graph_order != g.order())
        return {false, "cover order " + std::to_string(s.graph_order) + " != graph order " +
                           std::to_string(g.order())};
    std::vector<char> seen(g.order(), 0);
    for (std::size_t i = 0; i < s.paths.size(); ++i) {
        const auto& p = s.paths[i];
        if (p.empty()) return {false, "path " + std::to_string(i) + " is empty"};
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (p[j] < 0 || p[j] >= g.order())
                return {false, "vertex " + std::to_string(p[j]) + " out of range"};
            if (seen[p[j]])
                return {false, "vertex " + std::to_string(p[j]) + " appears twice"};
            seen[p[j]] = 1;
            if (j > 0 && !g.adjacent(p[j - 1], p[j]))
                return {false, "vertices " + std::to_string(p[j - 1]) + " and " +
                                   std::to_string(p[j]) + " are not adjacent"};
        }
    }
    for (int v = 0; v < g.order(); ++v)
        if (!seen[v]) return {false, "vertex " + std::to_string(v) + " not covered"};
    return {};
}

PathCover greedy_cover(const Graph& g) {
    const int n = g.order();
    std::vector<char> used(n, 0);
    std::vector<std::vector<int>> paths;
    for (int seed = 0; seed < n; ++seed) {
        if (used[seed]) continue;
        std::deque<int> path{seed};
        used[seed] = 1;
        for (bool grew = true; grew;) {
            grew = false;
            for (int v : g.neighbors(path.back()))
                if (!used[v]) {
                    path.push_back(v);
                    used[v] = 1;
                    grew = true;
                    break;
                }
        }
        for (bool grew = true; grew;) {
            grew = false;
            for (int v : g.neighbors(path.front()))
                if (!used[v]) {
                    path.push_front(v);
                    used[v] = 1;
                    grew = true;
                    break;
                }
        }
        paths.emplace_back(path.begin(), path.end());
    }

    std::vector<int> owner(n, -1);
    for (bool merged = true; merged;) {
        merged = false;
        for (auto& p : paths) canonicalize(p);
        std::sort(paths.begin(), paths.end(),
                  [](const std::vector<int>& a, const std::vector<int>& b) {
                      return a.front() < b.front();
                  });
        for (std::size_t i = 0; i < paths.size(); ++i)
            for (int v : paths[i]) owner[v] = static_cast<int>(i);
        for (std::size_t i = 0; i < paths.size() && !merged; ++i) {
            for (int z : {paths[i].back(), paths[i].front()}) {
                for (int v : g.neighbors(z)) {
                    const std::size_t j = static_cast<std::size_t>(owner[v]);
                    if (j == i || (paths[j].front() != v && paths[j].back() != v)) continue;
                    std::vector<int> joined = with_end_last(paths[i], z);
                    append_from(joined, paths[j], v);
                    paths[i] = std::move(joined);
                    paths.erase(paths.begin() + static_cast<long>(j));
                    merged = true;
                    break;
                }
                if (merged) break;
            }
        }
    }

    for (auto& p : paths) canonicalize(p);
    std::sort(paths.begin(), paths.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return a.front() < b.front();
              });
    return {std::move(paths), n};
}

PathCover random_cover(const Graph& g, std::mt19937& rng) {
    const int n = g.order();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<char> used(n, 0);
    std::vector<std::vector<int>> paths;
    std::vector<int> pool;
    for (int seed : order) {
        if (used[seed]) continue;
        std::deque<int> path{seed};
        used[seed] = 1;
        auto extend = [&](bool back) {
            for (;;) {
                pool.clear();
                for (int v : g.neighbors(back ? path.back() : path.front()))
                    if (!used[v]) pool.push_back(v);
                if (pool.empty()) return;
                int pick = pool[std::uniform_int_distribution<std::size_t>(
                    0, pool.size() - 1)(rng)];
                used[pick] = 1;
                back ? path.push_back(pick) : path.push_front(pick);
            }
        };
        extend(true);
        extend(false);
        paths.emplace_back(path.begin(), path.end());
    }
    for (auto& p : paths) canonicalize(p);
    std::sort(paths.begin(), paths.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return a.front() < b.front();
              });
    return {std::move(paths), n};
}

int objective_ld(const PathCover& s) {
    int total = 0;
    for (const auto& p : s.paths) total += cost_ld(static_cast<int>(p.size()));
    return total;
}

int objective_id(const PathCover& s) {
    int total = 0;
    for (const auto& p : s.paths) total += cost_id(static_cast<int>(p.size()));
    return total;
}

Rational cover_alpha(const PathCover& s) {
    if (s.graph_order == 0) return Rational(0);
    return Rational(static_cast<std::int64_t>(s.paths.size()), s.graph_order);
}

PathCover normalize_ld(const Graph& g, const PathCover& s) {
    auto check = validate_cover(g, s);
    if (!check.ok) throw std::invalid_argument("normalize_ld: " + check.detail);
    Workspace w(g, s.paths);
    w.split_all(true);
    while (try_ld_move(w)) {
    }
    return {std::move(w.paths), g.order()};
}

PathCover normalize_id(const Graph& g, const PathCover& s) {
    auto check = validate_cover(g, s);
    if (!check.ok) throw std::invalid_argument("normalize_id: " + check.detail);
    Workspace w(g, s.paths);
    w.split_all(false);
    for (bool changed = true; changed;) {
        changed = false;
        while (try_id_move(w)) changed = true;
        while (try_id_component_merge(w)) changed = true;
        if (rotate_closed_89(w)) changed = true;
    }
    return {std::move(w.paths), g.order()};
}

}  // namespace locdom
