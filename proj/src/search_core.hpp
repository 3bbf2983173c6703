#pragma once

// Internal machinery shared by the matrix and polynomial enumerators:
// the Find routine restoring zero linear coefficients, the minimal
// non-negative completion search, and start-point combination.

#include <vector>

#include "arith/frontier.hpp"
#include "arith/options.hpp"
#include "arith/poly.hpp"

namespace arith::detail {

struct SearchContext {
    const EnumOptions* opts = nullptr;
    void check_deadline() const;
};

/// Minimal elements of an arbitrary vector collection.
std::vector<IntVec> antichain_min(std::vector<IntVec> vs, int dim);

/// Minimal componentwise-max combinations over per-coordinate choice sets.
std::vector<IntVec> min_max_combinations(const std::vector<std::vector<IntVec>>& sets, int dim);

/// Minimal d' >= start with every linear coefficient of f(X+d') positive.
/// Expects all degree >= 2 coefficients positive and linear coefficients
/// non-negative at start (checked by the caller).
std::vector<IntVec> find_quasi_points(const SqFreePoly& f, const IntVec& start,
                                      const SearchContext& ctx, EnumStats& stats);

/// Minimal e >= 0 with h(e) >= 0, for h with all non-constant coefficients
/// positive (checked). Frontier-BFS with dominance pruning against emitted
/// completions.
std::vector<IntVec> min_nonneg_completions(const SqFreePoly& h,
                                           const SearchContext& ctx, EnumStats& stats);

/// Runs the start points through Find and completion and collects the
/// global minimal set. Checks the start-point invariants at runtime.
Frontier frontier_from_starts(const SqFreePoly& f, std::vector<IntVec> starts,
                              const EnumOptions& opts, EnumStats& stats);

} // namespace arith::detail
