#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arith/frontier.hpp"
#include "arith/matrix_enum.hpp"
#include "arith/options.hpp"
#include "arith/poly.hpp"

namespace arith {

struct SolutionSet {
    std::vector<IntVec> solutions;
    bool complete = false; // whether the method proves exhaustiveness in the region
    std::string region;
};

/// Positive integer zeros of f in the region that dominates no frontier
/// element, found by fixing one coordinate to each value below the
/// frontier's coordinate-wise bound and recursing. Slices that end in a
/// linear residual are resolved exactly; anything else (a non-dominated
/// residual, a vanishing hyperplane) flips `complete` to false. The
/// frontier must be min_dgeq0_poly(f).frontier.
SolutionSet slice_solve(const SqFreePoly& f, const Frontier& frontier,
                        const EnumOptions& opts = {});

/// Exhaustive scan of [1,box_1] x ... x [1,box_n] for arithmetical
/// structures of an integer matrix with zero diagonal (negative
/// off-diagonal entries permitted). Reports d whose kernel is spanned by a
/// positive primitive vector.
struct MatrixBoxResult {
    std::vector<ArithStructure> structures;
    bool complete = false;
    std::string region;
};
MatrixBoxResult brute_force_box(const IntMatrix& L, const IntVec& box,
                                std::uint64_t box_cap = kDefaultBoxCap);

/// Exhaustive scan for zeros of f in the box.
SolutionSet brute_force_box(const SqFreePoly& f, const IntVec& box,
                            std::uint64_t box_cap = kDefaultBoxCap);

} // namespace arith
