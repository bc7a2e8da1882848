#include "locdom/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace locdom {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n), adj_(n) {
    if (n < 0) throw std::invalid_argument("graph order must be non-negative");
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second) throw std::invalid_argument("duplicate edge");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    m_ = edges.size();
}

bool Graph::adjacent(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

Bitset Graph::closed_neighborhood(int v) const {
    Bitset b(n_);
    b.set(v);
    for (int w : adj_[v]) b.set(w);
    return b;
}

Bitset Graph::open_neighborhood(int v) const {
    Bitset b(n_);
    for (int w : adj_[v]) b.set(w);
    return b;
}

DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    p.degrees.resize(g.order());
    for (int v = 0; v < g.order(); v++) p.degrees[v] = g.degree(v);
    if (g.order() > 0) {
        auto [mn, mx] = std::minmax_element(p.degrees.begin(), p.degrees.end());
        p.min_degree = *mn;
        p.max_degree = *mx;
    }
    return p;
}

std::optional<int> girth(const Graph& g) {
    const int n = g.order();
    int best = -1;
    std::vector<int> dist(n), parent(n);
    for (int root = 0; root < n; root++) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::queue<int> q;
        dist[root] = 0;
        q.push(root);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            // Any deeper closure cannot beat the current best.
            if (best != -1 && 2 * dist[u] >= best) break;
            for (int w : g.neighbors(u)) {
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push(w);
                } else if (w != parent[u]) {
                    int len = dist[u] + dist[w] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

bool is_connected(const Graph& g) {
    const int n = g.order();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    seen[0] = 1;
    q.push(0);
    int cnt = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u))
            if (!seen[w]) {
                seen[w] = 1;
                cnt++;
                q.push(w);
            }
    }
    return cnt == n;
}

TwinCheck is_identifiable(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> closed(n);
    for (int v = 0; v < n; v++) {
        closed[v] = g.neighbors(v);
        closed[v].insert(std::lower_bound(closed[v].begin(), closed[v].end(), v), v);
    }
    for (int u = 0; u < n; u++)
        for (int v = u + 1; v < n; v++)
            if (closed[u] == closed[v]) return {false, std::make_pair(u, v)};
    return {true, std::nullopt};
}

std::string to_dot(const Graph& g, const VertexSet* highlight) {
    std::ostringstream out;
    out << "graph G {\n  node [shape=circle];\n";
    for (int v = 0; v < g.order(); v++) {
        out << "  " << v;
        if (highlight && highlight->contains(v)) out << " [style=filled, fillcolor=gray]";
        out << ";\n";
    }
    for (int u = 0; u < g.order(); u++)
        for (int v : g.neighbors(u))
            if (u < v) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace locdom
