#include "locdom/exact.hpp"

#include <algorithm>
#include <stdexcept>

#include "locdom/constructions.hpp"

namespace locdom {

namespace {

constexpr int kMaxOrder = 1024;

int ceil_div(int a, int b) { return (a + b - 1) / b; }

struct Searcher {
    const Graph& g;
    const int n;
    std::vector<Bitset> constraints;
    std::vector<std::vector<int>> member_of;
    std::vector<int> order;

    std::vector<int> hit_count;
    std::vector<int> cand_count;
    Bitset available;
    std::vector<int> chosen;
    int num_unhit = 0;
    int num_dead = 0;
    int budget_k = 0;

    std::uint64_t nodes = 0;
    bool expired = false;
    bool limited = false;
    std::chrono::steady_clock::time_point deadline;

    explicit Searcher(const Graph& graph) : g(graph), n(graph.order()), available(graph.order()) {}

    void add_constraint(Bitset c) {
        const int idx = static_cast<int>(constraints.size());
        for (int v = c.find_first(); v != -1; v = c.find_next(v)) member_of[v].push_back(idx);
        constraints.push_back(std::move(c));
    }

    void prepare() {
        hit_count.assign(constraints.size(), 0);
        cand_count.assign(constraints.size(), 0);
        for (std::size_t i = 0; i < constraints.size(); ++i)
            cand_count[i] = static_cast<int>(constraints[i].count());
        num_unhit = static_cast<int>(constraints.size());
        num_dead = 0;
        for (int v = 0; v < n; ++v) available.set(v);
        order.resize(n);
        for (int v = 0; v < n; ++v) order[v] = v;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
            return a < b;
        });
    }

    void include(int v) {
        available.reset(v);
        chosen.push_back(v);
        for (int ci : member_of[v]) {
            if (hit_count[ci]++ == 0) --num_unhit;
            --cand_count[ci];
        }
    }

    void undo_include(int v) {
        available.set(v);
        chosen.pop_back();
        for (int ci : member_of[v]) {
            if (--hit_count[ci] == 0) ++num_unhit;
            ++cand_count[ci];
        }
    }

    void exclude(int v) {
        available.reset(v);
        for (int ci : member_of[v])
            if (--cand_count[ci] == 0 && hit_count[ci] == 0) ++num_dead;
    }

    void undo_exclude(int v) {
        available.set(v);
        for (int ci : member_of[v])
            if (cand_count[ci]++ == 0 && hit_count[ci] == 0) --num_dead;
    }

    // Unhit constraints with pairwise disjoint candidate sets each need a
    // distinct further vertex.
    int disjoint_lower_bound() {
        Bitset taken(n);
        int lb = 0;
        for (std::size_t i = 0; i < constraints.size(); ++i) {
            if (hit_count[i] != 0) continue;
            Bitset cands = constraints[i] & available;
            if (cands.intersects(taken)) continue;
            taken |= cands;
            ++lb;
        }
        return lb;
    }

    bool dfs(int pos) {
        if (limited && (++nodes & 4095) == 0 &&
            std::chrono::steady_clock::now() >= deadline) {
            expired = true;
            return false;
        }
        if (!limited) ++nodes;
        if (num_unhit == 0) return true;
        if (num_dead > 0) return false;
        if (static_cast<int>(chosen.size()) >= budget_k) return false;
        // A sole remaining candidate of an unhit constraint is forced in.
        for (std::size_t ci = 0; ci < constraints.size(); ++ci)
            if (hit_count[ci] == 0 && cand_count[ci] == 1) {
                const int v = (constraints[ci] & available).find_first();
                include(v);
                if (dfs(pos)) return true;
                undo_include(v);
                return false;
            }
        while (pos < n && !available.test(order[pos])) ++pos;
        if (pos >= n) return false;
        if (static_cast<int>(chosen.size()) + disjoint_lower_bound() > budget_k) return false;
        const int v = order[pos];
        include(v);
        if (dfs(pos + 1)) return true;
        undo_include(v);
        if (expired) return false;
        exclude(v);
        if (dfs(pos + 1)) return true;
        undo_exclude(v);
        return false;
    }
};

}  // namespace

std::string to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Solved: return "solved";
        case SolveStatus::TimedOut: return "timed-out";
        default: return "not-identifiable";
    }
}

SolveResult solve_minimum(const Graph& g, Mode mode, std::chrono::milliseconds budget) {
    if (g.order() > kMaxOrder)
        throw std::invalid_argument("solve_minimum: graph order " + std::to_string(g.order()) +
                                    " exceeds the exact-search cap of " +
                                    std::to_string(kMaxOrder));
    const int n = g.order();
    SolveResult result;
    result.witness = VertexSet(n);

    if (mode == Mode::IdentifyingCode) {
        auto tw = is_identifiable(g);
        if (!tw.identifiable) {
            result.status = SolveStatus::NotIdentifiable;
            return result;
        }
    }

    Searcher s(g);
    s.member_of.assign(n, {});
    for (int v = 0; v < n; ++v) s.add_constraint(g.closed_neighborhood(v));
    if (mode == Mode::LocatingDominating) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                Bitset c = g.open_neighborhood(u) ^ g.open_neighborhood(v);
                c.set(u);
                c.set(v);
                s.add_constraint(std::move(c));
            }
    } else if (mode == Mode::IdentifyingCode) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                s.add_constraint(g.closed_neighborhood(u) ^ g.closed_neighborhood(v));
    }
    s.prepare();

    const VertexSet incumbent = verify_or_repair(g, VertexSet(n), mode);
    result.upper = incumbent.size();
    result.witness = incumbent;

    const int max_deg = n == 0 ? 0 : degree_profile(g).max_degree;
    int k0 = n == 0 ? 0 : ceil_div(n, max_deg + 1);
    if (mode == Mode::LocatingDominating) k0 = std::max(k0, ceil_div(2 * n, max_deg + 3));
    if (mode == Mode::IdentifyingCode) k0 = std::max(k0, ceil_div(2 * n, max_deg + 2));
    k0 = std::max(k0, s.disjoint_lower_bound());

    if (budget.count() > 0) {
        s.limited = true;
        s.deadline = std::chrono::steady_clock::now() + budget;
    }

    for (int k = k0;; ++k) {
        s.budget_k = k;
        s.chosen.clear();
        const bool found = s.dfs(0);
        result.nodes_expanded = s.nodes;
        result.lower = k;
        if (found) {
            result.status = SolveStatus::Solved;
            result.optimum = static_cast<int>(s.chosen.size());
            result.witness = VertexSet::of(n, s.chosen);
            result.upper = result.optimum;
            result.lower = result.optimum;
            result.proved = true;
            return result;
        }
        if (s.expired) {
            result.status = SolveStatus::TimedOut;
            result.proved = false;
            return result;
        }
        // k exhausted: every set of size <= k fails, so the optimum is > k.
        result.lower = k + 1;
    }
}

SolveResult min_dominating(const Graph& g) { return solve_minimum(g, Mode::Dominating); }

SolveResult min_locating_dominating(const Graph& g) {
    return solve_minimum(g, Mode::LocatingDominating);
}

SolveResult min_identifying_code(const Graph& g) {
    return solve_minimum(g, Mode::IdentifyingCode);
}

}  // namespace locdom
