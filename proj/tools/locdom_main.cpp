#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "locdom/acceptance.hpp"
#include "locdom/bounds.hpp"
#include "locdom/codes.hpp"
#include "locdom/constructions.hpp"
#include "locdom/exact.hpp"
#include "locdom/families.hpp"
#include "locdom/graph.hpp"
#include "locdom/graph6.hpp"
#include "locdom/pathcover.hpp"

namespace {

using nlohmann::json;

locdom::Graph read_graph(const std::string& arg) {
    std::string line = arg;
    if (line.empty() || line == "-") {
        if (!std::getline(std::cin, line))
            throw std::runtime_error("expected a graph6 line on standard input");
    }
    return locdom::parse_graph6(line);
}

locdom::Mode parse_mode(const std::string& m) {
    if (m == "dom" || m == "dominating") return locdom::Mode::Dominating;
    if (m == "ld" || m == "locating-dominating") return locdom::Mode::LocatingDominating;
    return locdom::Mode::IdentifyingCode;
}

std::vector<int> parse_vertex_list(const std::string& spec) {
    std::vector<int> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    return out;
}

std::chrono::milliseconds timeout_from(double seconds_flag, bool flag_given) {
    double seconds = seconds_flag;
    if (!flag_given) {
        const char* env = std::getenv("LOCDOM_TIMEOUT");
        seconds = env ? std::atof(env) : 0.0;
    }
    if (seconds <= 0) return std::chrono::milliseconds(0);
    return std::chrono::milliseconds(static_cast<long long>(seconds * 1000.0));
}

void print_json(const json& j) { std::cout << j.dump() << "\n"; }

json violation_json(const locdom::CheckResult& r) {
    if (!r.violation.has_value()) return nullptr;
    json v;
    v["kind"] = to_string(r.violation->kind);
    json vs = json::array();
    vs.push_back(r.violation->a);
    if (r.violation->b >= 0) vs.push_back(r.violation->b);
    v["vertices"] = vs;
    return v;
}

int run_generate(const std::string& family, int n, int k, unsigned seed, bool min_deg_2,
                 const std::string& format) {
    locdom::Graph g;
    if (family == "cycle") {
        g = locdom::cycle(n);
    } else if (family == "flower5") {
        g = locdom::flower(5, k);
    } else if (family == "flower6") {
        g = locdom::flower(6, k);
    } else if (family == "petersen") {
        g = locdom::petersen();
    } else if (family == "p11") {
        g = locdom::p11();
    } else if (family == "g11") {
        g = locdom::g11(k);
    } else if (family == "heawood") {
        g = locdom::heawood();
    } else if (family == "g12") {
        g = locdom::g12();
    } else {
        std::mt19937 rng(seed);
        g = locdom::random_girth5_graph(n, rng, min_deg_2);
    }
    if (format == "dot")
        std::cout << locdom::to_dot(g);
    else
        std::cout << locdom::encode_graph6(g) << "\n";
    return 0;
}

int run_validate(const std::string& graph_arg, const std::string& mode_str,
                 const std::string& set_spec) {
    const locdom::Graph g = read_graph(graph_arg);
    const locdom::Mode mode = parse_mode(mode_str);
    locdom::VertexSet s(g.order());
    for (int v : parse_vertex_list(set_spec)) {
        if (v < 0 || v >= g.order())
            throw std::invalid_argument("set vertex " + std::to_string(v) +
                                        " is outside 0.." + std::to_string(g.order() - 1));
        s.insert(v);
    }
    locdom::CheckResult r;
    switch (mode) {
        case locdom::Mode::Dominating: r = locdom::dominates(g, s); break;
        case locdom::Mode::LocatingDominating: r = locdom::is_locating_dominating(g, s); break;
        default: r = locdom::is_identifying_code(g, s); break;
    }
    json out;
    out["mode"] = locdom::to_string(mode);
    out["schema"] = 1;
    out["size"] = s.size();
    out["status"] = r.status == locdom::CheckStatus::Valid
                        ? "valid"
                        : (r.status == locdom::CheckStatus::Invalid ? "invalid" : "impossible");
    out["violation"] = violation_json(r);
    print_json(out);
    return r.ok() ? 0 : 1;
}

int run_cover(const std::string& graph_arg, const std::string& normalize) {
    const locdom::Graph g = read_graph(graph_arg);
    locdom::PathCover cover = locdom::greedy_cover(g);
    if (normalize == "ld") cover = locdom::normalize_ld(g, cover);
    if (normalize == "id") cover = locdom::normalize_id(g, cover);
    for (const auto& path : cover.paths) {
        for (std::size_t i = 0; i < path.size(); ++i)
            std::cout << (i ? "," : "") << path[i];
        std::cout << "\n";
    }
    json out;
    out["alpha"] = locdom::cover_alpha(cover).to_string();
    out["objective_id"] = locdom::objective_id(cover);
    out["objective_ld"] = locdom::objective_ld(cover);
    out["path_count"] = cover.paths.size();
    out["schema"] = 1;
    print_json(out);
    return 0;
}

int run_construct(const std::string& graph_arg, const std::string& method,
                  const std::string& format) {
    const locdom::Graph g = read_graph(graph_arg);
    locdom::ConstructionResult r;
    if (method == "ld-half")
        r = locdom::ld_half(g);
    else if (method == "d-of-s")
        r = locdom::ld_from_cover(g, locdom::greedy_cover(g));
    else if (method == "id-5-7")
        r = locdom::id_five_sevenths(g);
    else
        r = locdom::id_from_cover(g, locdom::greedy_cover(g));
    const bool ld_kind = method == "ld-half" || method == "d-of-s";
    const bool valid = ld_kind ? locdom::is_locating_dominating(g, r.code).ok()
                               : locdom::is_identifying_code(g, r.code).ok();
    if (format == "dot") {
        std::cout << locdom::to_dot(g, &r.code);
        return valid ? 0 : 1;
    }
    json out;
    out["alpha"] = r.cover_stats.alpha.to_string();
    out["bound"] = r.bound_claim.to_string();
    out["code"] = r.code.to_vector();
    out["hypotheses_met"] = r.hypotheses_met;
    out["method"] = r.method;
    out["repaired"] = r.repaired;
    out["schema"] = 1;
    out["size"] = r.code.size();
    out["valid"] = valid;
    print_json(out);
    return valid ? 0 : 1;
}

int run_solve(const std::string& graph_arg, const std::string& mode_str, double timeout,
              bool timeout_given) {
    const locdom::Graph g = read_graph(graph_arg);
    const locdom::SolveResult r =
        locdom::solve_minimum(g, parse_mode(mode_str), timeout_from(timeout, timeout_given));
    json out;
    out["lower"] = r.lower;
    out["mode"] = locdom::to_string(parse_mode(mode_str));
    out["nodes_expanded"] = r.nodes_expanded;
    out["optimum"] = r.status == locdom::SolveStatus::Solved ? json(r.optimum) : json(nullptr);
    out["proved"] = r.proved;
    out["schema"] = 1;
    out["status"] = to_string(r.status);
    out["upper"] = r.upper >= 0 ? json(r.upper) : json(nullptr);
    out["witness"] = r.witness.to_vector();
    print_json(out);
    return r.status == locdom::SolveStatus::TimedOut ? 1 : 0;
}

int run_report(const std::string& graph_arg) {
    const locdom::Graph g = read_graph(graph_arg);
    const locdom::Rational alpha = locdom::cover_alpha(locdom::greedy_cover(g));
    const locdom::BoundReport r = locdom::upper_bounds(g, alpha);
    auto candidates = [](const std::vector<locdom::BoundCandidate>& cs) {
        json arr = json::array();
        for (const auto& c : cs) {
            json e;
            e["applicable"] = c.applicable;
            json hyp;
            for (const auto& [name, met] : c.hypotheses) hyp[name] = met;
            e["hypotheses"] = hyp;
            e["name"] = c.name;
            e["value"] = c.value.to_string();
            arr.push_back(e);
        }
        return arr;
    };
    json out;
    out["alpha_achieved"] = alpha.to_string();
    out["girth"] = r.girth_value.has_value() ? json(*r.girth_value) : json(nullptr);
    out["id_lower"] = r.id_lower.to_string();
    out["id_upper_candidates"] = candidates(r.id_upper_candidates);
    out["ld_lower"] = r.ld_lower.to_string();
    out["ld_upper_candidates"] = candidates(r.ld_upper_candidates);
    out["max_degree"] = r.big_delta;
    out["min_degree"] = r.delta;
    out["n"] = r.n;
    out["schema"] = 1;
    print_json(out);
    return 0;
}

int run_reproduce(double budget_seconds) {
    const auto budget =
        std::chrono::milliseconds(static_cast<long long>(budget_seconds * 1000.0));
    const locdom::AcceptanceReport report = locdom::run_acceptance(budget);
    std::cout << std::left << std::setw(14) << "graph" << std::setw(6) << "mode" << std::setw(10)
              << "expected" << std::setw(8) << "got"
              << "result\n";
    for (const auto& row : report.rows)
        std::cout << std::left << std::setw(14) << row.graph << std::setw(6) << row.mode
                  << std::setw(10) << row.expected << std::setw(8) << row.got
                  << (row.passed ? "PASS" : "FAIL") << (row.timed_out ? " (timed out)" : "")
                  << "\n";
    std::cout << "\n";
    for (const auto& c : report.criteria)
        std::cout << (c.passed ? "PASS" : "FAIL") << " criterion " << c.index << ": " << c.name
                  << " — " << c.detail << "\n";
    return report.all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"locating-dominating sets and identifying codes on graphs of girth >= 5"};
    app.require_subcommand(1);

    std::string family, graph_arg, mode_str = "ld", set_spec, normalize, format = "g6",
                method = "ld-half";
    int n = 0, k = 2;
    unsigned seed = 1;
    bool min_deg_2 = false;
    double timeout = 0.0, budget = 1500.0;

    auto* gen = app.add_subcommand("generate", "emit a named graph family member");
    gen->add_option("--family", family, "family name")
        ->required()
        ->check(CLI::IsMember({"cycle", "flower5", "flower6", "petersen", "p11", "g11", "heawood",
                               "g12", "random-girth5"}));
    gen->add_option("--n", n, "vertex count (cycle, random-girth5)");
    gen->add_option("--k", k, "family parameter (flower5, flower6, g11)");
    gen->add_option("--seed", seed, "random seed (random-girth5)");
    gen->add_flag("--min-deg-2", min_deg_2, "force minimum degree 2 (random-girth5)");
    gen->add_option("--format", format, "g6 or dot")->check(CLI::IsMember({"g6", "dot"}));

    auto* val = app.add_subcommand("validate", "check a vertex set against a graph");
    val->add_option("--graph", graph_arg, "graph6 string, or - for stdin");
    val->add_option("--mode", mode_str, "dominating, locating-dominating, or identifying-code")
        ->required()
        ->check(CLI::IsMember(
            {"dom", "ld", "id", "dominating", "locating-dominating", "identifying-code"}));
    val->add_option("--set", set_spec, "comma-separated vertex ids")->required();

    auto* cov = app.add_subcommand("cover", "build a vertex-disjoint path cover");
    cov->add_option("--graph", graph_arg, "graph6 string, or - for stdin");
    cov->add_option("--normalize", normalize, "ld or id")
        ->check(CLI::IsMember({"ld", "id"}));

    auto* con = app.add_subcommand("construct", "build a code from a path cover");
    con->add_option("--graph", graph_arg, "graph6 string, or - for stdin");
    con->add_option("--method", method, "ld-half, d-of-s, id-5-7, or c-of-s")
        ->required()
        ->check(CLI::IsMember({"ld-half", "d-of-s", "id-5-7", "c-of-s"}));
    con->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

    auto* sol = app.add_subcommand("solve", "exact minimum code search");
    sol->add_option("--graph", graph_arg, "graph6 string, or - for stdin");
    sol->add_option("--mode", mode_str, "dominating, locating-dominating, or identifying-code")
        ->required()
        ->check(CLI::IsMember(
            {"dom", "ld", "id", "dominating", "locating-dominating", "identifying-code"}));
    auto* timeout_opt = sol->add_option("--timeout", timeout, "seconds; 0 disables the limit");

    auto* rep = app.add_subcommand("report", "evaluate all bound formulas for a graph");
    rep->add_option("--graph", graph_arg, "graph6 string, or - for stdin");

    auto* repro = app.add_subcommand("reproduce", "run the full acceptance suite");
    repro->add_option("--budget", budget, "seconds allowed for each order-23 solve");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return run_generate(family, n, k, seed, min_deg_2, format == "dot" ? "dot" : "g6");
        if (val->parsed()) return run_validate(graph_arg, mode_str, set_spec);
        if (cov->parsed()) return run_cover(graph_arg, normalize);
        if (con->parsed()) return run_construct(graph_arg, method, format);
        if (sol->parsed()) return run_solve(graph_arg, mode_str, timeout, !timeout_opt->empty());
        if (rep->parsed()) return run_report(graph_arg);
        if (repro->parsed()) return run_reproduce(budget);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
