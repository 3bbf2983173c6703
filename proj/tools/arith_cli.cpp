#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "arith/classify.hpp"
#include "arith/errors.hpp"
#include "arith/graphs.hpp"
#include "arith/json_io.hpp"
#include "arith/matrix_enum.hpp"
#include "arith/poly_enum.hpp"
#include "arith/solutions.hpp"

namespace {

using namespace arith;

struct RunConfig {
    std::string input;
    std::string expr;
    std::string out_format = "json";
    int threads = 1;
    std::uint64_t box_cap = kDefaultBoxCap;
    std::optional<double> time_cap_s;
    bool slow = false;
};

int log_level() {
    const char* v = std::getenv("ARITH_LOG");
    if (!v || !*v) return 0;
    return std::atoi(v) > 1 ? 2 : 1;
}

EnumOptions enum_options(const RunConfig& cfg) {
    EnumOptions opts;
    opts.threads = cfg.threads;
    double cap_s = -1;
    if (cfg.time_cap_s) cap_s = *cfg.time_cap_s;
    else if (!cfg.slow) cap_s = 900; // guard against K6-scale runs unless --slow
    if (cap_s > 0)
        opts.deadline = std::chrono::steady_clock::now() +
                        std::chrono::milliseconds(static_cast<long>(cap_s * 1000));
    return opts;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadInput("cannot open input file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

IntMatrix load_matrix(const RunConfig& cfg) {
    if (cfg.input.empty()) throw BadInput("matrix commands need --input <file.json>");
    return matrix_from_json(Json::parse(read_file(cfg.input)));
}

ParsedPoly load_poly(const RunConfig& cfg) {
    if (!cfg.expr.empty()) return parse_sqfree(cfg.expr);
    if (!cfg.input.empty()) return poly_from_json(Json::parse(read_file(cfg.input)));
    throw BadInput("polynomial commands need --expr or --input");
}

IntVec parse_csv_ints(const std::string& text) {
    IntVec out;
    std::string token;
    std::stringstream ss(text);
    while (std::getline(ss, token, ',')) {
        if (token.empty()) throw BadInput("empty entry in a comma-separated integer list");
        out.emplace_back(token);
    }
    if (out.empty()) throw BadInput("empty comma-separated integer list");
    return out;
}

std::vector<std::string> default_var_names(int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

void log_stats(const EnumStats& st) {
    if (log_level() < 1) return;
    std::cerr << "[arith] starts=" << st.start_points << " find_nodes=" << st.find_nodes
              << " completion_nodes=" << st.completion_nodes << " wall_ms=" << st.wall_ms << "\n";
}

std::vector<IntVec> structure_ds(const std::vector<PolyStructure>& ss) {
    std::vector<IntVec> out;
    for (const PolyStructure& s : ss) out.push_back(s.d);
    return out;
}

int cmd_matrix(const std::string& action, const RunConfig& cfg) {
    const IntMatrix L = load_matrix(cfg);
    if (action == "classify") {
        emit(zclass_to_json(classify_z(L)));
        return 0;
    }
    if (action == "frontier") {
        const Frontier f = min_dgeq0_matrix(L, enum_options(cfg));
        if (cfg.out_format == "csv")
            std::cout << vectors_to_csv(f.elems(), default_var_names(L.size()));
        else if (cfg.out_format == "text")
            for (const IntVec& v : f.elems()) std::cout << vec_to_string(v) << "\n";
        else
            emit(frontier_to_json(f));
        return 0;
    }
    // structures
    const EnumReport report = arithmetical_structures(L, enum_options(cfg));
    log_stats(report.stats);
    if (cfg.out_format == "csv") {
        std::vector<IntVec> rows;
        for (const ArithStructure& s : report.structures) rows.push_back(s.d);
        std::cout << vectors_to_csv(rows, default_var_names(L.size()));
    } else if (cfg.out_format == "text") {
        if (report.outcome == EnumOutcome::empty)
            std::cout << "no arithmetical structures (zero row)\n";
        else if (report.outcome == EnumOutcome::infinite)
            std::cout << "infinitely many arithmetical structures (reducible matrix)\n";
        else {
            std::cout << "frontier size " << report.frontier.size() << ", structures "
                      << report.structures.size() << "\n";
            for (const ArithStructure& s : report.structures)
                std::cout << "d=" << vec_to_string(s.d) << " r=" << vec_to_string(s.r)
                          << " |K|=" << s.k_order.get_str() << "\n";
        }
    } else {
        emit(enum_report_to_json(report));
    }
    return 0;
}

int cmd_poly(const std::string& action, const RunConfig& cfg, const Int& alpha,
             const std::string& box, const std::string& method, const std::string& coeffs) {
    if (action == "mp3") {
        const IntVec c = parse_csv_ints(coeffs);
        if (c.size() != 4) throw BadInput("--coeffs needs a1,a2,a3,b");
        auto witness = mp3_membership(c[0], c[1], c[2], c[3]);
        Json out{{"member", witness.has_value()}};
        if (witness) out["witness"] = matrix_to_json(*witness);
        emit(out);
        return 0;
    }
    if (action == "lift") {
        if (cfg.expr.empty()) throw BadInput("lift needs --expr with a general polynomial");
        const ParsedGeneralPoly F = parse_general_poly(cfg.expr);
        const PolyEnumReport report = lift_non_squarefree(F.poly, enum_options(cfg));
        log_stats(report.stats);
        emit(poly_report_to_json(report, F.vars));
        return 0;
    }

    const ParsedPoly p = load_poly(cfg);
    if (action == "frontier") {
        const Frontier f = frontier_at_level(p.poly, alpha, enum_options(cfg));
        if (cfg.out_format == "csv") std::cout << vectors_to_csv(f.elems(), p.vars);
        else if (cfg.out_format == "text")
            for (const IntVec& v : f.elems()) std::cout << vec_to_string(v) << "\n";
        else
            emit(frontier_to_json(f));
        return 0;
    }
    if (action == "structures") {
        const PolyEnumReport report = min_dgeq0_poly(p.poly, enum_options(cfg));
        log_stats(report.stats);
        if (cfg.out_format == "csv")
            std::cout << vectors_to_csv(structure_ds(report.structures), p.vars);
        else
            emit(poly_report_to_json(report, p.vars));
        return 0;
    }
    // solve
    if (method == "box") {
        if (box.empty()) throw BadInput("--method box needs --box b1,b2,...");
        emit(solutions_to_json(brute_force_box(p.poly, parse_csv_ints(box), cfg.box_cap)));
        return 0;
    }
    const PolyEnumReport report = min_dgeq0_poly(p.poly, enum_options(cfg));
    SolutionSet sliced = slice_solve(p.poly, report.frontier, enum_options(cfg));
    // full zero set = structures (frontier zeros) + sliced region
    for (const PolyStructure& s : report.structures) sliced.solutions.push_back(s.d);
    std::sort(sliced.solutions.begin(), sliced.solutions.end(), vec_lex_less);
    sliced.solutions.erase(std::unique(sliced.solutions.begin(), sliced.solutions.end()),
                           sliced.solutions.end());
    Json out = solutions_to_json(sliced);
    out["frontier"] = frontier_to_json(report.frontier);
    emit(out);
    return 0;
}

int cmd_graph(const std::string& action, const RunConfig& cfg, const std::string& name, int n) {
    if (action == "family") {
        const GraphSpec g = family(name, n);
        if (cfg.out_format == "json") emit(matrix_to_json(adjacency(g)));
        else std::cout << format_edge_list(g);
        return 0;
    }
    // enumerate
    const auto classes = connected_graphs_upto(n);
    if (cfg.out_format == "json") {
        Json out = Json::array();
        for (const GraphSpec& g : classes) out.push_back(matrix_to_json(adjacency(g)));
        emit(out);
    } else {
        for (const GraphSpec& g : classes) std::cout << format_edge_list(g) << "\n";
    }
    return 0;
}

int cmd_conjecture(const RunConfig& cfg, int n) {
    const ConjectureReport report = conjecture_check(n, enum_options(cfg));
    if (cfg.out_format == "csv") {
        std::cout << "edges,count\n";
        for (const ConjectureEntry& e : report.entries) {
            std::string edges;
            for (const auto& [i, j, w] : e.graph.edges) {
                if (!edges.empty()) edges += ";";
                edges += std::to_string(i) + "-" + std::to_string(j);
            }
            std::cout << edges << "," << e.count << "\n";
        }
    } else if (cfg.out_format == "text") {
        for (const ConjectureEntry& e : report.entries)
            std::cout << e.count << "\n";
        std::cout << "path " << report.path_count << (report.path_attains_min ? " (min)" : "")
                  << ", complete " << report.complete_count
                  << (report.complete_attains_max ? " (max)" : "") << "\n";
    } else {
        emit(conjecture_to_json(report));
    }
    return 0;
}

int cmd_oracle_box(const RunConfig& cfg, const std::string& box) {
    if (box.empty()) throw BadInput("oracle box needs --box b1,b2,...");
    const IntVec bounds = parse_csv_ints(box);
    if (!cfg.expr.empty()) {
        const ParsedPoly p = parse_sqfree(cfg.expr);
        emit(solutions_to_json(brute_force_box(p.poly, bounds, cfg.box_cap)));
        return 0;
    }
    emit(matrix_box_to_json(brute_force_box(load_matrix(cfg), bounds, cfg.box_cap)));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact enumeration of arithmetical structures of matrices and dominated polynomials"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--input", cfg.input, "input file (matrix/polynomial JSON)");
    app.add_option("--expr", cfg.expr, "inline polynomial expression");
    app.add_option("--out", cfg.out_format, "output format: json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--threads", cfg.threads, "worker threads for enumeration (default 1)")
        ->check(CLI::PositiveNumber);
    app.add_option("--box-cap", cfg.box_cap, "maximum box volume for brute-force scans")
        ->check(CLI::PositiveNumber);
    app.add_option("--time-cap", cfg.time_cap_s, "wall-clock cap in seconds (exit 3 when exceeded)");
    app.add_flag("--slow", cfg.slow, "allow multi-hour runs (lifts the default 15-minute guard)");
    Int alpha = 0;
    std::string alpha_str = "0", box, method = "slice", coeffs, fam_name = "path";
    int graph_n = 4;
    app.add_option("--alpha", alpha_str, "level-set threshold for poly frontier");

    auto* matrix = app.add_subcommand("matrix", "matrix commands");
    auto* m_frontier = matrix->add_subcommand("frontier", "min D>=0(L)");
    auto* m_structures = matrix->add_subcommand("structures", "arithmetical structures of L");
    auto* m_classify = matrix->add_subcommand("classify", "Z-matrix taxonomy");
    matrix->require_subcommand(1);

    auto* poly = app.add_subcommand("poly", "polynomial commands");
    auto* p_frontier = poly->add_subcommand("frontier", "min D>=alpha(f)");
    auto* p_structures = poly->add_subcommand("structures", "arithmetical structures of f");
    auto* p_solve = poly->add_subcommand("solve", "positive integer solutions of f = 0");
    p_solve->add_option("--method", method, "slice|box")->check(CLI::IsMember({"slice", "box"}));
    p_solve->add_option("--box", box, "box bounds b1,b2,... for --method box");
    auto* p_mp3 = poly->add_subcommand("mp3", "three-variable MP[X] membership");
    p_mp3->add_option("--coeffs", coeffs, "a1,a2,a3,b")->required();
    auto* p_lift = poly->add_subcommand("lift", "non-square-free lifting");
    poly->require_subcommand(1);

    auto* graph = app.add_subcommand("graph", "graph generators");
    auto* g_family = graph->add_subcommand("family", "named graph family");
    g_family->add_option("--name", fam_name, "path|cycle|complete|star")->required();
    g_family->add_option("--n", graph_n, "vertex count")->required();
    auto* g_enum = graph->add_subcommand("enumerate", "connected graphs up to isomorphism");
    g_enum->add_option("--n", graph_n, "vertex count")->required();
    graph->require_subcommand(1);

    auto* conjecture = app.add_subcommand("conjecture", "path/complete extremality table");
    conjecture->add_option("--n", graph_n, "vertex count")->required();

    auto* oracle = app.add_subcommand("oracle", "independent brute-force oracles");
    auto* o_box = oracle->add_subcommand("box", "exhaustive box scan");
    o_box->add_option("--box", box, "box bounds b1,b2,...")->required();
    oracle->require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    try {
        alpha = Int(alpha_str);
        if (m_frontier->parsed()) return cmd_matrix("frontier", cfg);
        if (m_structures->parsed()) return cmd_matrix("structures", cfg);
        if (m_classify->parsed()) return cmd_matrix("classify", cfg);
        if (p_frontier->parsed()) return cmd_poly("frontier", cfg, alpha, box, method, coeffs);
        if (p_structures->parsed()) return cmd_poly("structures", cfg, alpha, box, method, coeffs);
        if (p_solve->parsed()) return cmd_poly("solve", cfg, alpha, box, method, coeffs);
        if (p_mp3->parsed()) return cmd_poly("mp3", cfg, alpha, box, method, coeffs);
        if (p_lift->parsed()) return cmd_poly("lift", cfg, alpha, box, method, coeffs);
        if (g_family->parsed()) return cmd_graph("family", cfg, fam_name, graph_n);
        if (g_enum->parsed()) return cmd_graph("enumerate", cfg, fam_name, graph_n);
        if (conjecture->parsed()) return cmd_conjecture(cfg, graph_n);
        if (o_box->parsed()) return cmd_oracle_box(cfg, box);
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const ArithError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
