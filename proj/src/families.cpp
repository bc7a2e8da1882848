#include "locdom/families.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace locdom {

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; i++) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

Graph flower(int core, int k) {
    if (core != 5 && core != 6) throw std::invalid_argument("flower core must be 5 or 6");
    if (k < 2) throw std::invalid_argument("flower needs at least 2 petals");
    std::vector<std::pair<int, int>> edges;
    for (int b = 0; b < k; b++) {
        int base = 1 + core * b;
        for (int i = 0; i < core; i++) edges.emplace_back(base + i, base + (i + 1) % core);
        edges.emplace_back(0, base);
    }
    return Graph(core * k + 1, edges);
}

Graph petersen() {
    // Outer 5-cycle 3-4-0-1-2, inner 5-cycle 7-6-5-9-8, five spokes. In this
    // labeling 0..9 is a Hamiltonian path and {1,9} is an edge.
    static const std::vector<std::pair<int, int>> edges = {
        {0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},           // outer cycle
        {5, 6}, {6, 7}, {7, 8}, {8, 9}, {5, 9},           // inner cycle
        {0, 7}, {4, 5}, {2, 6}, {1, 9}, {3, 8},           // spokes
    };
    Graph g(10, edges);
    // A 3-regular graph of girth 5 on 10 vertices is unique, so this check
    // pins the construction completely.
    auto prof = degree_profile(g);
    if (prof.min_degree != 3 || prof.max_degree != 3 || girth(g) != std::optional<int>(5) ||
        !g.adjacent(1, 9))
        throw std::logic_error("petersen construction failed its structural self-check");
    return g;
}

Graph p11() {
    Graph base = petersen();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < base.order(); u++)
        for (int v : base.neighbors(u))
            if (u < v && !(u == 0 && v == 1)) edges.emplace_back(u, v);
    edges.emplace_back(0, 10);
    edges.emplace_back(10, 1);
    return Graph(11, edges);
}

Graph g11(int k) {
    if (k < 2) throw std::invalid_argument("g11 needs at least 2 copies");
    Graph copy = p11();
    std::vector<std::pair<int, int>> edges;
    for (int b = 0; b < k; b++) {
        int base = 1 + 11 * b;
        for (int u = 0; u < copy.order(); u++)
            for (int v : copy.neighbors(u))
                if (u < v) edges.emplace_back(base + u, base + v);
        edges.emplace_back(0, base + 10);  // hub to the copy's degree-2 vertex
    }
    return Graph(11 * k + 1, edges);
}

Graph heawood() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 14; i++) edges.emplace_back(i, (i + 1) % 14);
    for (auto [u, v] : {std::pair{0, 5}, {1, 10}, {2, 7}, {3, 12}, {4, 9}, {6, 11}, {8, 13}})
        edges.emplace_back(u, v);
    return Graph(14, edges);
}

Graph g12() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 12; i++) edges.emplace_back(i, (i + 1) % 12);
    for (auto [u, v] : {std::pair{0, 4}, {1, 8}, {2, 6}, {3, 10}, {5, 9}, {7, 11}})
        edges.emplace_back(u, v);
    return Graph(12, edges);
}

namespace {

// All triangles and 4-cycles through the current edge set are destroyed by
// deleting one removable edge of a shortest offending cycle at a time.
// `removable` limits which edges may be deleted; it always intersects any
// short cycle for the callers below.
Graph prune_short_cycles(int n, std::vector<std::pair<int, int>> edges,
                         std::vector<char> removable, std::mt19937& rng) {
    auto build_adj = [&](std::vector<std::vector<int>>& adj) {
        adj.assign(n, {});
        for (auto [u, v] : edges) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        for (auto& nb : adj) std::sort(nb.begin(), nb.end());
    };
    auto has_edge = [&](const std::vector<std::vector<int>>& adj, int u, int v) {
        return std::binary_search(adj[u].begin(), adj[u].end(), v);
    };
    while (true) {
        std::vector<std::vector<int>> adj;
        build_adj(adj);
        // Find one triangle or 4-cycle; collect its edges.
        std::vector<std::pair<int, int>> cyc;
        for (int a = 0; a < n && cyc.empty(); a++)
            for (std::size_t i = 0; i < adj[a].size() && cyc.empty(); i++)
                for (std::size_t j = i + 1; j < adj[a].size() && cyc.empty(); j++) {
                    int b = adj[a][i], c = adj[a][j];
                    if (has_edge(adj, b, c)) cyc = {{a, b}, {a, c}, {b, c}};
                }
        if (cyc.empty()) {
            for (int a = 0; a < n && cyc.empty(); a++)
                for (int b : adj[a]) {
                    if (b < a) continue;
                    for (int c : adj[b]) {
                        if (c == a) continue;
                        for (int d : adj[c]) {
                            if (d == b || d == a) continue;
                            if (has_edge(adj, d, a)) {
                                cyc = {{a, b}, {b, c}, {c, d}, {d, a}};
                                break;
                            }
                        }
                        if (!cyc.empty()) break;
                    }
                    if (!cyc.empty()) break;
                }
        }
        if (cyc.empty()) break;
        std::vector<std::size_t> candidates;
        for (std::size_t e = 0; e < edges.size(); e++) {
            if (!removable[e]) continue;
            auto [u, v] = edges[e];
            for (auto [a, b] : cyc)
                if ((a == u && b == v) || (a == v && b == u)) candidates.push_back(e);
        }
        std::size_t pick = candidates[std::uniform_int_distribution<std::size_t>(
            0, candidates.size() - 1)(rng)];
        edges.erase(edges.begin() + pick);
        removable.erase(removable.begin() + pick);
    }
    return Graph(n, edges);
}

}  // namespace

Graph random_girth5_graph(int n, std::mt19937& rng, bool require_min_degree_2) {
    if (n < 0) throw std::invalid_argument("order must be non-negative");
    if (require_min_degree_2) {
        // A Hamiltonian cycle guarantees min degree 2 and, for n >= 5, girth
        // at least 5 once all chord-involving short cycles are destroyed.
        if (n < 5) throw std::invalid_argument("girth >= 5 with min degree 2 needs n >= 5");
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::pair<int, int>> edges;
        std::vector<char> removable;
        std::vector<std::vector<char>> used(n, std::vector<char>(n, 0));
        for (int i = 0; i < n; i++) {
            int u = perm[i], v = perm[(i + 1) % n];
            edges.emplace_back(u, v);
            removable.push_back(0);
            used[u][v] = used[v][u] = 1;
        }
        std::bernoulli_distribution chord(1.5 / n);
        for (int u = 0; u < n; u++)
            for (int v = u + 1; v < n; v++)
                if (!used[u][v] && chord(rng)) {
                    edges.emplace_back(u, v);
                    removable.push_back(1);
                    used[u][v] = used[v][u] = 1;
                }
        return prune_short_cycles(n, edges, removable, rng);
    }
    std::vector<std::pair<int, int>> edges;
    std::bernoulli_distribution keep(n >= 2 ? 2.0 / n : 0.0);
    for (int u = 0; u < n; u++)
        for (int v = u + 1; v < n; v++)
            if (keep(rng)) edges.emplace_back(u, v);
    return prune_short_cycles(n, edges, std::vector<char>(edges.size(), 1), rng);
}

}  // namespace locdom
