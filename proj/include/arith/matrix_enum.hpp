#pragma once

#include <vector>

#include "arith/frontier.hpp"
#include "arith/matrix.hpp"
#include "arith/options.hpp"

namespace arith {

/// Insert a 1 at position s (1-based): d_s[i] = d[i] for i < s, 1 for
/// i = s, d[i-1] for i > s.
IntVec expand_vec(const IntVec& d, int s);

/// min D>=0 of [[0,a],[b,0]]: the minimal pairs (d, max(1, ceil(ab/d))).
Frontier min_dgeq0_2x2(const Int& a, const Int& b);

/// Minimal e in N^n (zeros allowed) with M + Diag(e) an almost non-singular
/// M-matrix. M must be a quasi non-singular M-matrix; since its proper
/// minors stay positive under diagonal growth, only det >= 0 is searched.
Frontier min_completion(const IntMatrix& M);

/// The deduplicated componentwise-max combination vectors fed to Find,
/// with their determinants; exposed for inspection of the combination
/// stage. L must be non-negative with zero diagonal and n >= 3.
struct StartPoint {
    IntVec d;
    Int det;
};
std::vector<StartPoint> combination_start_points(const IntMatrix& L);

/// min D>=0(L): the minimal d > 0 with Diag(d) - L almost non-singular.
Frontier min_dgeq0_matrix(const IntMatrix& L, const EnumOptions& opts = {});

struct ArithStructure {
    IntVec d;
    IntVec r;
    Int k_order;
};

enum class EnumOutcome { finite, infinite, empty };

struct EnumReport {
    EnumOutcome outcome = EnumOutcome::finite;
    Frontier frontier{0};
    std::vector<ArithStructure> structures;
    EnumStats stats;
};

/// Full enumeration: Empty when L has a zero row, Infinite when L is
/// reducible without a zero row, otherwise the finite list of structures
/// (d, r, |K|) together with min D>=0(L).
EnumReport arithmetical_structures(const IntMatrix& L, const EnumOptions& opts = {});

} // namespace arith
