#pragma once

// Brute-force reference implementations used to cross-check the library.
// Everything here is exponential or worse and must only run on tiny graphs.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <vector>

#include "locdom/graph.hpp"

namespace testutil {

inline locdom::VertexSet set_of_mask(int n, std::uint32_t mask) {
    locdom::VertexSet s(n);
    for (int v = 0; v < n; ++v)
        if (mask >> v & 1u) s.insert(v);
    return s;
}

template <typename Fn>
void for_each_subset(int n, Fn&& fn) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) fn(set_of_mask(n, mask));
}

inline std::vector<int> closed_trace(const locdom::Graph& g, const locdom::VertexSet& d, int v) {
    std::vector<int> out;
    if (d.contains(v)) out.push_back(v);
    for (int u : g.neighbors(v))
        if (d.contains(u)) out.push_back(u);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<int> open_trace(const locdom::Graph& g, const locdom::VertexSet& d, int v) {
    std::vector<int> out;
    for (int u : g.neighbors(v))
        if (d.contains(u)) out.push_back(u);
    std::sort(out.begin(), out.end());
    return out;
}

inline bool naive_dominates(const locdom::Graph& g, const locdom::VertexSet& d) {
    for (int v = 0; v < g.order(); ++v)
        if (closed_trace(g, d, v).empty()) return false;
    return true;
}

inline bool naive_is_ld(const locdom::Graph& g, const locdom::VertexSet& d) {
    if (!naive_dominates(g, d)) return false;
    for (int u = 0; u < g.order(); ++u) {
        if (d.contains(u)) continue;
        for (int v = u + 1; v < g.order(); ++v) {
            if (d.contains(v)) continue;
            if (open_trace(g, d, u) == open_trace(g, d, v)) return false;
        }
    }
    return true;
}

inline bool naive_is_id(const locdom::Graph& g, const locdom::VertexSet& d) {
    for (int u = 0; u < g.order(); ++u)
        if (closed_trace(g, d, u).empty()) return false;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (closed_trace(g, d, u) == closed_trace(g, d, v)) return false;
    return true;
}

// Smallest valid set size by mask enumeration, -1 when no mask works.
template <typename Pred>
int naive_minimum(const locdom::Graph& g, Pred&& valid) {
    const int n = g.order();
    int best = -1;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const int size = __builtin_popcount(mask);
        if (best != -1 && size >= best) continue;
        const locdom::VertexSet s = set_of_mask(n, mask);
        if (valid(g, s)) best = size;
    }
    return best;
}

// Shortest cycle by edge deletion: remove {u,v}, find dist(u,v), add 1.
inline std::optional<int> naive_girth(const locdom::Graph& g) {
    const int n = g.order();
    int best = -1;
    for (int u = 0; u < n; ++u) {
        for (int v : g.neighbors(u)) {
            if (v < u) continue;
            std::vector<int> dist(n, -1);
            std::queue<int> q;
            dist[u] = 0;
            q.push(u);
            while (!q.empty()) {
                int x = q.front();
                q.pop();
                for (int y : g.neighbors(x)) {
                    if ((x == u && y == v) || (x == v && y == u)) continue;
                    if (dist[y] == -1) {
                        dist[y] = dist[x] + 1;
                        q.push(y);
                    }
                }
            }
            if (dist[v] != -1 && (best == -1 || dist[v] + 1 < best)) best = dist[v] + 1;
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

}  // namespace testutil
