#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "locdom/bitset.hpp"

namespace locdom {

// Simple undirected graph on dense vertex ids 0..n-1. Immutable after
// construction; adjacency lists are kept sorted. Self-loops and duplicate
// edges are rejected.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    std::size_t edge_count() const { return m_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return int(adj_[v].size()); }
    bool adjacent(int u, int v) const;

    // Closed neighborhood N[v] as a bitset over the vertex universe.
    Bitset closed_neighborhood(int v) const;
    // Open neighborhood N(v).
    Bitset open_neighborhood(int v) const;

private:
    int n_ = 0;
    std::size_t m_ = 0;
    std::vector<std::vector<int>> adj_;
};

// Subset of vertices of a graph of a fixed order.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : bits_(universe) {}
    VertexSet(int universe, std::initializer_list<int> vs) : bits_(universe) {
        for (int v : vs) insert(v);
    }
    static VertexSet of(int universe, const std::vector<int>& vs) {
        VertexSet s(universe);
        for (int v : vs) s.insert(v);
        return s;
    }

    int universe() const { return bits_.universe(); }
    bool contains(int v) const { return bits_.test(v); }
    void insert(int v) {
        if (!bits_.test(v)) {
            bits_.set(v);
            size_++;
        }
    }
    void erase(int v) {
        if (bits_.test(v)) {
            bits_.reset(v);
            size_--;
        }
    }
    int size() const { return size_; }
    bool empty() const { return size_ == 0; }

    // Members in ascending order.
    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(size_);
        for (int v = bits_.find_first(); v != -1; v = bits_.find_next(v)) out.push_back(v);
        return out;
    }
    const Bitset& bits() const { return bits_; }

    friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.bits_ == b.bits_; }
    friend bool operator!=(const VertexSet& a, const VertexSet& b) { return !(a == b); }

private:
    Bitset bits_;
    int size_ = 0;
};

struct DegreeProfile {
    int min_degree = 0;
    int max_degree = 0;
    std::vector<int> degrees;
};

DegreeProfile degree_profile(const Graph& g);

// Length of a shortest cycle; nullopt for acyclic graphs. BFS from every
// vertex; the minimum over all roots of dist(u)+dist(w)+1 across non-tree
// edges (u,w) is exact.
std::optional<int> girth(const Graph& g);

bool is_connected(const Graph& g);

struct TwinCheck {
    bool identifiable = true;
    // Lexicographically first pair with equal closed neighborhoods.
    std::optional<std::pair<int, int>> twins;
};

// A graph admits an identifying code iff no two vertices share a closed
// neighborhood.
TwinCheck is_identifiable(const Graph& g);

// Graphviz "graph" source; vertices in `highlight` are rendered filled.
std::string to_dot(const Graph& g, const VertexSet* highlight = nullptr);

}  // namespace locdom
