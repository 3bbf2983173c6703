#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "arith/matrix.hpp"
#include "arith/matrix_enum.hpp"
#include "arith/options.hpp"

namespace arith {

/// Graph or weighted digraph on vertices 1..n; no loops.
struct GraphSpec {
    int n = 0;
    bool directed = false;
    std::vector<std::tuple<int, int, Int>> edges; // (i, j, weight)
};

/// Adjacency matrix; parallel edges accumulate their weights.
IntMatrix adjacency(const GraphSpec& g);

/// Named families: path | cycle | complete | star.
GraphSpec family(const std::string& name, int n);

/// All connected simple graphs on exactly n vertices, one per isomorphism
/// class (canonical form: minimal adjacency bit-string over all vertex
/// permutations). 2 <= n <= 6.
std::vector<GraphSpec> connected_graphs_upto(int n);

/// Canonical bit-string key of a simple undirected graph; used to identify
/// isomorphism classes.
std::uint64_t canonical_key(const GraphSpec& g);

struct ConjectureEntry {
    GraphSpec graph;
    std::uint64_t canon = 0;
    std::size_t count = 0; // |A(G)|
};

struct ConjectureReport {
    int n = 0;
    std::vector<ConjectureEntry> entries; // sorted by canonical form
    std::size_t path_count = 0;
    std::size_t complete_count = 0;
    bool path_attains_min = false;
    bool complete_attains_max = false;
};

/// |A(G)| per isomorphism class of connected graphs on n vertices, with
/// the extremality flags of the path/complete-graph conjecture. 3 <= n <= 5.
ConjectureReport conjecture_check(int n, const EnumOptions& opts = {});

/// Edge-list text: first line "n" or "n directed", then "i j" or "i j w".
GraphSpec parse_edge_list(const std::string& text);
std::string format_edge_list(const GraphSpec& g);

} // namespace arith
