#include "arith/graphs.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "arith/errors.hpp"

namespace arith {

IntMatrix adjacency(const GraphSpec& g) {
    if (g.n < 1) throw BadSize("graph needs at least one vertex");
    IntMatrix A(g.n);
    for (const auto& [i, j, w] : g.edges) {
        if (i < 1 || i > g.n || j < 1 || j > g.n) throw IndexOutOfRange("vertex outside 1..n");
        if (i == j) throw LoopEdge("loops are not allowed");
        if (w < 1) throw BadInput("edge weights must be positive");
        A.at(i - 1, j - 1) += w;
        if (!g.directed) A.at(j - 1, i - 1) += w;
    }
    return A;
}

GraphSpec family(const std::string& name, int n) {
    GraphSpec g;
    g.n = n;
    if (name == "path") {
        if (n < 2) throw BadSize("path needs n >= 2");
        for (int i = 1; i < n; ++i) g.edges.emplace_back(i, i + 1, Int(1));
    } else if (name == "cycle") {
        if (n < 3) throw BadSize("cycle needs n >= 3");
        for (int i = 1; i < n; ++i) g.edges.emplace_back(i, i + 1, Int(1));
        g.edges.emplace_back(n, 1, Int(1));
    } else if (name == "complete") {
        if (n < 2) throw BadSize("complete graph needs n >= 2");
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) g.edges.emplace_back(i, j, Int(1));
    } else if (name == "star") {
        if (n < 2) throw BadSize("star needs n >= 2");
        for (int i = 2; i <= n; ++i) g.edges.emplace_back(1, i, Int(1));
    } else {
        throw BadInput("unknown family '" + name + "' (path|cycle|complete|star)");
    }
    return g;
}

namespace {

int pair_bit(int i, int j, int n) {
    // bit index of the unordered pair (i, j), i < j, 0-based vertices
    int idx = 0;
    for (int a = 0; a < i; ++a) idx += n - a - 1;
    return idx + (j - i - 1);
}

std::uint64_t graph_bits(const GraphSpec& g) {
    std::uint64_t bits = 0;
    for (const auto& [i, j, w] : g.edges) {
        int a = std::min(i, j) - 1, b = std::max(i, j) - 1;
        bits |= std::uint64_t(1) << pair_bit(a, b, g.n);
    }
    return bits;
}

std::uint64_t canon_bits(std::uint64_t bits, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t(0);
    do {
        std::uint64_t mapped = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (!(bits & (std::uint64_t(1) << pair_bit(i, j, n)))) continue;
                int a = perm[static_cast<std::size_t>(i)], b = perm[static_cast<std::size_t>(j)];
                if (a > b) std::swap(a, b);
                mapped |= std::uint64_t(1) << pair_bit(a, b, n);
            }
        best = std::min(best, mapped);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

GraphSpec spec_from_bits(std::uint64_t bits, int n) {
    GraphSpec g;
    g.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (bits & (std::uint64_t(1) << pair_bit(i, j, n)))
                g.edges.emplace_back(i + 1, j + 1, Int(1));
    return g;
}

bool connected_bits(std::uint64_t bits, int n) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < n; ++w) {
            if (w == v || seen[static_cast<std::size_t>(w)]) continue;
            int a = std::min(v, w), b = std::max(v, w);
            if (bits & (std::uint64_t(1) << pair_bit(a, b, n))) {
                seen[static_cast<std::size_t>(w)] = 1;
                stack.push_back(w);
                ++count;
            }
        }
    }
    return count == n;
}

} // namespace

std::uint64_t canonical_key(const GraphSpec& g) {
    if (g.directed) throw BadInput("canonical keys are defined for undirected graphs");
    return canon_bits(graph_bits(g), g.n);
}

std::vector<GraphSpec> connected_graphs_upto(int n) {
    if (n < 2 || n > 6) throw BadSize("connected-graph enumeration supports 2 <= n <= 6");
    const int pairs = n * (n - 1) / 2;
    std::vector<std::uint64_t> canons;
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << pairs); ++bits) {
        if (!connected_bits(bits, n)) continue;
        canons.push_back(canon_bits(bits, n));
    }
    std::sort(canons.begin(), canons.end());
    canons.erase(std::unique(canons.begin(), canons.end()), canons.end());
    std::vector<GraphSpec> out;
    out.reserve(canons.size());
    for (std::uint64_t c : canons) out.push_back(spec_from_bits(c, n));
    return out;
}

ConjectureReport conjecture_check(int n, const EnumOptions& opts) {
    if (n < 3 || n > 5) throw BadSize("conjecture harness supports 3 <= n <= 5");
    ConjectureReport report;
    report.n = n;
    const std::uint64_t path_canon = canonical_key(family("path", n));
    const std::uint64_t complete_canon = canonical_key(family("complete", n));
    std::size_t minimum = SIZE_MAX, maximum = 0;
    for (const GraphSpec& g : connected_graphs_upto(n)) {
        ConjectureEntry entry;
        entry.graph = g;
        entry.canon = canonical_key(g);
        entry.count = arithmetical_structures(adjacency(g), opts).structures.size();
        minimum = std::min(minimum, entry.count);
        maximum = std::max(maximum, entry.count);
        if (entry.canon == path_canon) report.path_count = entry.count;
        if (entry.canon == complete_canon) report.complete_count = entry.count;
        report.entries.push_back(std::move(entry));
    }
    report.path_attains_min = report.path_count == minimum;
    report.complete_attains_max = report.complete_count == maximum;
    return report;
}

GraphSpec parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    GraphSpec g;
    bool header = false;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue; // blank line
        if (!header) {
            g.n = std::stoi(first);
            std::string flag;
            if (ls >> flag) {
                if (flag != "directed") throw SyntaxError("expected 'directed' or end of header line");
                g.directed = true;
            }
            header = true;
            continue;
        }
        int i = std::stoi(first);
        int j;
        if (!(ls >> j)) throw SyntaxError("edge line needs two vertex numbers");
        std::string w;
        Int weight = 1;
        if (ls >> w) weight = Int(w);
        g.edges.emplace_back(i, j, weight);
    }
    if (!header) throw SyntaxError("missing header line with the vertex count");
    return g;
}

std::string format_edge_list(const GraphSpec& g) {
    std::string out = std::to_string(g.n);
    if (g.directed) out += " directed";
    out += "\n";
    for (const auto& [i, j, w] : g.edges) {
        out += std::to_string(i) + " " + std::to_string(j);
        if (w != 1) out += " " + w.get_str();
        out += "\n";
    }
    return out;
}

} // namespace arith
