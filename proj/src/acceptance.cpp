#include "locdom/acceptance.hpp"

#include <random>
#include <sstream>
#include <tuple>

#include "locdom/bounds.hpp"
#include "locdom/codes.hpp"
#include "locdom/constructions.hpp"
#include "locdom/exact.hpp"
#include "locdom/families.hpp"
#include "locdom/graph6.hpp"
#include "locdom/pathcover.hpp"

namespace locdom {

namespace {

struct NamedGraph {
    std::string name;
    Graph g;
};

std::vector<NamedGraph> named_suite() {
    return {
        {"C5", cycle(5)},
        {"C6", cycle(6)},
        {"C7", cycle(7)},
        {"C8", cycle(8)},
        {"C9", cycle(9)},
        {"flower(5,2)", flower(5, 2)},
        {"flower(6,2)", flower(6, 2)},
        {"flower(5,3)", flower(5, 3)},
        {"flower(6,3)", flower(6, 3)},
        {"petersen", petersen()},
        {"P11", p11()},
        {"G11^2", g11(2)},
        {"G11^3", g11(3)},
        {"heawood", heawood()},
        {"G12", g12()},
    };
}

Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

CheckResult check_for_mode(const Graph& g, const VertexSet& c, Mode mode) {
    switch (mode) {
        case Mode::Dominating: return dominates(g, c);
        case Mode::LocatingDominating: return is_locating_dominating(g, c);
        default: return is_identifying_code(g, c);
    }
}

struct Tally {
    int checks = 0;
    int failures = 0;
    std::string first;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok && failures++ == 0) first = what;
    }

    CriterionResult result(int index, std::string name, const std::string& extra = "") const {
        CriterionResult r;
        r.index = index;
        r.name = std::move(name);
        r.passed = failures == 0;
        std::ostringstream d;
        d << checks << " checks, " << failures << " failures";
        if (!first.empty()) d << "; first: " << first;
        if (!extra.empty()) d << "; " << extra;
        r.detail = d.str();
        return r;
    }
};

std::vector<ExactValueRow> criterion1_rows(std::chrono::milliseconds large_budget) {
    const std::chrono::milliseconds small_budget(60000);
    const std::vector<std::tuple<std::string, Graph, Mode, int, bool>> cases = {
        {"C6", cycle(6), Mode::LocatingDominating, 3, false},
        {"C8", cycle(8), Mode::LocatingDominating, 4, false},
        {"C7", cycle(7), Mode::IdentifyingCode, 5, false},
        {"H14", heawood(), Mode::LocatingDominating, 6, false},
        {"G12", g12(), Mode::IdentifyingCode, 6, false},
        {"P10", petersen(), Mode::LocatingDominating, 4, false},
        {"P10", petersen(), Mode::IdentifyingCode, 4, false},
        {"flower(6,2)", flower(6, 2), Mode::LocatingDominating, 6, false},
        {"flower(5,2)", flower(5, 2), Mode::IdentifyingCode, 6, false},
        {"G11^2", g11(2), Mode::LocatingDominating, 8, true},
        {"G11^2", g11(2), Mode::IdentifyingCode, 10, true},
    };
    std::vector<ExactValueRow> rows;
    for (const auto& [name, g, mode, expected, large] : cases) {
        ExactValueRow row;
        row.graph = name;
        row.mode = mode == Mode::LocatingDominating ? "ld" : "id";
        row.expected = expected;
        const SolveResult r = solve_minimum(g, mode, large ? large_budget : small_budget);
        row.timed_out = r.status == SolveStatus::TimedOut;
        row.got = r.status == SolveStatus::Solved ? r.optimum : r.upper;
        const bool witness_ok = check_for_mode(g, r.witness, mode).ok() &&
                                r.witness.size() == (r.status == SolveStatus::Solved
                                                         ? r.optimum
                                                         : r.upper);
        if (r.status == SolveStatus::Solved)
            row.passed = r.optimum == expected && witness_ok;
        else if (r.status == SolveStatus::TimedOut)
            row.passed = r.lower >= expected && r.upper == expected && witness_ok;
        rows.push_back(row);
    }
    return rows;
}

CriterionResult criterion1(const std::vector<ExactValueRow>& rows) {
    Tally t;
    for (const auto& row : rows)
        t.expect(row.passed, row.graph + "/" + row.mode + " expected " +
                                 std::to_string(row.expected) + " got " + std::to_string(row.got) +
                                 (row.timed_out ? " (timed out)" : ""));
    return t.result(1, "exact values reproduced");
}

CriterionResult criterion2() {
    Tally t;
    std::mt19937 rng(0x10d5eed);
    int id_repairs = 0;

    auto check_graph = [&](const Graph& g, const std::string& name, bool use_random_cover) {
        const auto gv = girth(g);
        t.expect(!gv.has_value() || *gv >= 5, name + ": girth below 5");
        const PathCover cover = use_random_cover ? random_cover(g, rng) : greedy_cover(g);

        const auto ld = ld_from_cover(g, cover);
        t.expect(is_locating_dominating(g, ld.code).ok(), name + ": d-of-s output invalid");
        t.expect(Rational(ld.code.size()) <= ld.bound_claim, name + ": d-of-s size bound");

        if (degree_profile(g).min_degree >= 2) {
            const auto lh = ld_half(g);
            t.expect(is_locating_dominating(g, lh.code).ok() && !lh.repaired &&
                         Rational(lh.code.size()) <= Rational(g.order(), 2),
                     name + ": ld-half invalid, repaired, or above n/2");
            const auto i57 = id_five_sevenths(g);
            t.expect(is_identifying_code(g, i57.code).ok() && !i57.repaired &&
                         Rational(i57.code.size()) <= Rational(5 * g.order(), 7),
                     name + ": id-5/7 invalid, repaired, or above 5n/7");
        }
        if (is_identifiable(g).identifiable) {
            const auto idc = id_from_cover(g, cover);
            if (idc.repaired) ++id_repairs;
            t.expect(is_identifying_code(g, idc.code).ok(), name + ": c-of-s output invalid");
            t.expect(Rational(idc.code.size()) <= idc.bound_claim, name + ": c-of-s size bound");
        }
    };

    for (int i = 0; i < 600; ++i) {
        const int n = 1 + i % 16;
        check_graph(random_girth5_graph(n, rng, false), "sparse#" + std::to_string(i), i % 2 == 0);
    }
    for (int i = 0; i < 600; ++i) {
        const int n = 5 + i % 12;
        check_graph(random_girth5_graph(n, rng, true), "mindeg2#" + std::to_string(i),
                    i % 2 == 1);
    }
    for (const auto& [name, g] : named_suite()) check_graph(g, name, false);

    return t.result(2, "construction soundness",
                    "1215 graphs, " + std::to_string(id_repairs) + " c-of-s repairs");
}

CriterionResult criterion3() {
    Tally t;
    std::vector<NamedGraph> suite;
    for (int n = 5; n <= 10; ++n) suite.push_back({"C" + std::to_string(n), cycle(n)});
    suite.push_back({"petersen", petersen()});
    suite.push_back({"K1", Graph(1, {})});
    suite.push_back({"K1,3", Graph(4, {{0, 1}, {0, 2}, {0, 3}})});
    std::mt19937 rng(0x9137);
    for (int i = 0; i < 30; ++i)
        suite.push_back({"rand#" + std::to_string(i),
                         random_girth5_graph(3 + i % 8, rng, false)});

    for (const auto& [name, g] : suite) {
        const int n = g.order();
        if (n > 10) continue;
        const bool idable = is_identifiable(g).identifiable;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            VertexSet s(n);
            for (int v = 0; v < n; ++v)
                if (mask & (1u << v)) s.insert(v);
            t.expect(is_ld_girth5(g, s).ok() == is_locating_dominating(g, s).ok(),
                     name + ": ld validators disagree on mask " + std::to_string(mask));
            if (idable)
                t.expect(is_id_girth5(g, s).ok() == is_identifying_code(g, s).ok(),
                         name + ": id validators disagree on mask " + std::to_string(mask));
        }
    }
    return t.result(3, "girth-5 characterizations match the definitions");
}

int naive_minimum(const Graph& g, Mode mode) {
    const int n = g.order();
    int best = n + 1;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) >= best) continue;
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) s.insert(v);
        if (check_for_mode(g, s, mode).ok()) best = __builtin_popcount(mask);
    }
    return best;
}

CriterionResult criterion4() {
    Tally t;
    std::mt19937 rng(0x04ac1e);
    for (int i = 0; i < 200; ++i) {
        const int n = 1 + i % 8;
        const double p = 0.15 + 0.1 * (i % 7);
        const Graph g = random_graph(n, p, rng);
        const std::string name = "rand#" + std::to_string(i);
        for (Mode mode : {Mode::Dominating, Mode::LocatingDominating, Mode::IdentifyingCode}) {
            const SolveResult r = solve_minimum(g, mode);
            if (mode == Mode::IdentifyingCode && !is_identifiable(g).identifiable) {
                t.expect(r.status == SolveStatus::NotIdentifiable,
                         name + ": solver missed non-identifiability");
                continue;
            }
            const int naive = naive_minimum(g, mode);
            t.expect(r.status == SolveStatus::Solved && r.optimum == naive,
                     name + "/" + to_string(mode) + ": solver " + std::to_string(r.optimum) +
                         " vs naive " + std::to_string(naive));
            t.expect(check_for_mode(g, r.witness, mode).ok() && r.witness.size() == r.optimum,
                     name + "/" + to_string(mode) + ": witness invalid");
        }
    }
    return t.result(4, "solver matches naive enumeration");
}

CriterionResult criterion5() {
    Tally t;
    std::vector<NamedGraph> instances;
    for (int n = 5; n <= 9; ++n) instances.push_back({"C" + std::to_string(n), cycle(n)});
    instances.push_back({"flower(5,2)", flower(5, 2)});
    instances.push_back({"flower(6,2)", flower(6, 2)});
    instances.push_back({"petersen", petersen()});
    instances.push_back({"P11", p11()});
    instances.push_back({"heawood", heawood()});
    instances.push_back({"G12", g12()});
    std::mt19937 rng(0x5a44);
    for (int i = 0; i < 60; ++i)
        instances.push_back({"rand#" + std::to_string(i),
                             random_graph(1 + i % 8, 0.15 + 0.1 * (i % 7), rng)});

    for (const auto& [name, g] : instances) {
        const auto report = upper_bounds(g, cover_alpha(greedy_cover(g)));
        const bool idable = is_identifiable(g).identifiable;
        const auto ld = solve_minimum(g, Mode::LocatingDominating);
        const auto id = idable ? solve_minimum(g, Mode::IdentifyingCode) : SolveResult{};
        if (report.big_delta >= 1) {
            const auto [ld_lb, id_lb] = lower_bounds(g.order(), report.big_delta);
            t.expect(ld_lb <= ld.optimum, name + ": ld lower bound exceeds optimum");
            if (idable) t.expect(id_lb <= id.optimum, name + ": id lower bound exceeds optimum");
        }
        for (const auto& cand : report.ld_upper_candidates)
            if (cand.applicable)
                t.expect(Rational(ld.optimum) <= cand.value,
                         name + ": ld optimum above " + cand.name);
        if (idable)
            for (const auto& cand : report.id_upper_candidates)
                if (cand.applicable)
                    t.expect(Rational(id.optimum) <= cand.value,
                             name + ": id optimum above " + cand.name);
    }
    return t.result(5, "bound sandwich holds on solved instances");
}

CriterionResult criterion6() {
    CriterionResult r;
    r.index = 6;
    r.name = "path cover density report on cubic instances";
    r.passed = true;
    std::ostringstream d;
    bool first = true;
    for (const auto& [name, g] : named_suite()) {
        const auto prof = degree_profile(g);
        if (prof.min_degree != 3 || prof.max_degree != 3 || !is_connected(g)) continue;
        const Rational a = cover_alpha(greedy_cover(g));
        if (!first) d << ", ";
        first = false;
        d << name << " alpha=" << a.to_string();
        if (a > Rational(1, 9)) d << " [above 1/9]";
    }
    r.detail = d.str();
    return r;
}

CriterionResult criterion7() {
    Tally t;
    std::mt19937 rng(0x6d6d);
    for (int i = 0; i < 1000; ++i) {
        const int n = 1 + i % 62;
        const double p = 0.1 + 0.08 * (i % 10);
        const Graph g = random_graph(n, p, rng);
        const std::string s = encode_graph6(g);
        const Graph h = parse_graph6(s);
        bool same = h.order() == g.order() && h.edge_count() == g.edge_count();
        for (int v = 0; same && v < g.order(); ++v) same = h.neighbors(v) == g.neighbors(v);
        t.expect(same && encode_graph6(h) == s,
                 "roundtrip mismatch at graph #" + std::to_string(i));
    }
    return t.result(7, "graph6 roundtrip byte-exact");
}

}  // namespace

AcceptanceReport run_acceptance(std::chrono::milliseconds large_budget) {
    AcceptanceReport report;
    report.rows = criterion1_rows(large_budget);
    report.criteria.push_back(criterion1(report.rows));
    report.criteria.push_back(criterion2());
    report.criteria.push_back(criterion3());
    report.criteria.push_back(criterion4());
    report.criteria.push_back(criterion5());
    report.criteria.push_back(criterion6());
    report.criteria.push_back(criterion7());
    report.all_passed = true;
    for (const auto& c : report.criteria)
        if (!c.passed) report.all_passed = false;
    return report;
}

}  // namespace locdom
