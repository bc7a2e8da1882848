#include "locdom/codes.hpp"

#include <map>
#include <stdexcept>

namespace locdom {

namespace {

// Signature -> first bearer, scanned in ascending vertex order so the
// reported pair is the lexicographically least one.
class SignatureMap {
  public:
    // Returns the previous bearer of sig, or -1 if sig is new.
    int insert(const std::vector<int>& sig, int x) {
        auto [it, fresh] = first_.try_emplace(sig, x);
        return fresh ? -1 : it->second;
    }

  private:
    std::map<std::vector<int>, int> first_;
};

std::vector<int> open_signature(const Graph& g, const VertexSet& d, int x) {
    std::vector<int> sig;
    for (int y : g.neighbors(x))
        if (d.contains(y)) sig.push_back(y);
    return sig;
}

std::vector<int> closed_signature(const Graph& g, const VertexSet& d, int x) {
    // Kept sorted: neighbors are ascending and x is spliced into place.
    std::vector<int> sig;
    bool placed = false;
    for (int y : g.neighbors(x)) {
        if (!placed && x < y && d.contains(x)) {
            sig.push_back(x);
            placed = true;
        }
        if (d.contains(y)) sig.push_back(y);
    }
    if (!placed && d.contains(x)) sig.push_back(x);
    return sig;
}

CheckResult invalid(ViolationKind kind, int a, int b = -1) {
    CheckResult r;
    r.status = CheckStatus::Invalid;
    r.violation = Violation{kind, a, b};
    return r;
}

void require_girth5(const Graph& g, const char* fn) {
    auto gr = girth(g);
    if (gr && *gr < 5)
        throw std::invalid_argument(std::string(fn) + ": graph has girth " +
                                    std::to_string(*gr) + ", need girth >= 5");
}

}  // namespace

std::string to_string(Mode m) {
    switch (m) {
        case Mode::Dominating: return "dominating";
        case Mode::LocatingDominating: return "locating-dominating";
        case Mode::IdentifyingCode: return "identifying-code";
    }
    return "?";
}

std::string to_string(ViolationKind k) {
    switch (k) {
        case ViolationKind::UndominatedVertex: return "undominated-vertex";
        case ViolationKind::UnseparatedPair: return "unseparated-pair";
        case ViolationKind::SizeTwoComponent: return "size-two-component";
        case ViolationKind::ForcedCollision: return "forced-collision";
    }
    return "?";
}

std::vector<std::uint8_t> domination_census(const Graph& g, const VertexSet& d) {
    std::vector<std::uint8_t> count(g.order(), 0);
    for (int x = 0; x < g.order(); ++x) {
        int c = d.contains(x) ? 1 : 0;
        for (int y : g.neighbors(x)) {
            if (c >= 2) break;
            if (d.contains(y)) ++c;
        }
        count[x] = static_cast<std::uint8_t>(c > 2 ? 2 : c);
    }
    return count;
}

CheckResult dominates(const Graph& g, const VertexSet& d) {
    auto census = domination_census(g, d);
    for (int x = 0; x < g.order(); ++x)
        if (census[x] == 0) return invalid(ViolationKind::UndominatedVertex, x);
    return {};
}

CheckResult is_locating_dominating(const Graph& g, const VertexSet& d) {
    SignatureMap seen;
    for (int x = 0; x < g.order(); ++x) {
        if (d.contains(x)) continue;
        auto sig = open_signature(g, d, x);
        if (sig.empty()) return invalid(ViolationKind::UndominatedVertex, x);
        int prev = seen.insert(sig, x);
        if (prev >= 0) return invalid(ViolationKind::UnseparatedPair, prev, x);
    }
    return {};
}

CheckResult is_identifying_code(const Graph& g, const VertexSet& c) {
    auto tw = is_identifiable(g);
    if (!tw.identifiable) {
        CheckResult r;
        r.status = CheckStatus::Impossible;
        r.violation =
            Violation{ViolationKind::UnseparatedPair, tw.twins->first, tw.twins->second};
        return r;
    }
    SignatureMap seen;
    for (int x = 0; x < g.order(); ++x) {
        auto sig = closed_signature(g, c, x);
        if (sig.empty()) return invalid(ViolationKind::UndominatedVertex, x);
        int prev = seen.insert(sig, x);
        if (prev >= 0) return invalid(ViolationKind::UnseparatedPair, prev, x);
    }
    return {};
}

CheckResult is_ld_girth5(const Graph& g, const VertexSet& d) {
    require_girth5(g, "is_ld_girth5");
    auto census = domination_census(g, d);
    for (int x = 0; x < g.order(); ++x)
        if (census[x] == 0) return invalid(ViolationKind::UndominatedVertex, x);
    // owner[y] = the 1-dominated non-code vertex forced onto code vertex y.
    std::vector<int> owner(g.order(), -1);
    for (int x = 0; x < g.order(); ++x) {
        if (d.contains(x) || census[x] != 1) continue;
        int y = -1;
        for (int z : g.neighbors(x))
            if (d.contains(z)) {
                y = z;
                break;
            }
        if (owner[y] >= 0) return invalid(ViolationKind::ForcedCollision, owner[y], x);
        owner[y] = x;
    }
    return {};
}

CheckResult is_id_girth5(const Graph& g, const VertexSet& c) {
    require_girth5(g, "is_id_girth5");
    auto tw = is_identifiable(g);
    if (!tw.identifiable)
        throw std::invalid_argument("is_id_girth5: graph has twins " +
                                    std::to_string(tw.twins->first) + "," +
                                    std::to_string(tw.twins->second));

    auto census = domination_census(g, c);
    for (int x = 0; x < g.order(); ++x)
        if (census[x] == 0) return invalid(ViolationKind::UndominatedVertex, x);

    // Component sizes of G[c], found by BFS from each code vertex.
    const int n = g.order();
    std::vector<int> comp(n, -1);
    std::vector<int> comp_size;
    std::vector<int> comp_min;
    for (int s = 0; s < n; ++s) {
        if (!c.contains(s) || comp[s] >= 0) continue;
        int id = static_cast<int>(comp_size.size());
        comp_size.push_back(0);
        comp_min.push_back(s);
        std::vector<int> queue{s};
        comp[s] = id;
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            ++comp_size[id];
            for (int v : g.neighbors(u))
                if (c.contains(v) && comp[v] < 0) {
                    comp[v] = id;
                    queue.push_back(v);
                }
        }
    }
    for (std::size_t id = 0; id < comp_size.size(); ++id) {
        if (comp_size[id] != 2) continue;
        int a = comp_min[id];
        int b = -1;
        for (int v : g.neighbors(a))
            if (c.contains(v)) {
                b = v;
                break;
            }
        return invalid(ViolationKind::SizeTwoComponent, a, b);
    }

    std::vector<int> owner(n, -1);
    for (int x = 0; x < n; ++x) {
        if (c.contains(x) || census[x] != 1) continue;
        int y = -1;
        for (int z : g.neighbors(x))
            if (c.contains(z)) {
                y = z;
                break;
            }
        // A dominator isolated in G[c] has the same signature {y} as x.
        if (comp_size[comp[y]] < 3) return invalid(ViolationKind::ForcedCollision, x, y);
        if (owner[y] >= 0) return invalid(ViolationKind::ForcedCollision, owner[y], x);
        owner[y] = x;
    }
    return {};
}

}  // namespace locdom
