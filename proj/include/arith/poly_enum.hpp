#pragma once

#include <vector>

#include "arith/frontier.hpp"
#include "arith/options.hpp"
#include "arith/poly.hpp"

namespace arith {

/// A d-arithmetical structure of a polynomial with its critical-group order.
struct PolyStructure {
    IntVec d;
    Int k_order;
};

/// Result of enumerating one variable-disjoint factor, with the 0-based
/// positions its variables occupy in the parent polynomial.
struct FactorReport {
    SqFreePoly factor;
    std::vector<int> vars;
    Frontier frontier{0};
    std::vector<PolyStructure> structures;
};

struct PolyEnumReport {
    Frontier frontier{0};
    std::vector<PolyStructure> structures;
    /// Reducible inputs have infinitely many arithmetical structures
    /// whenever any factor has one; the finite description below
    /// generates them.
    bool reducible = false;
    bool infinite = false;
    std::vector<FactorReport> factors;
    std::vector<IntVec> witnesses; // one vanishing factor, frontier elements elsewhere
    EnumStats stats;
};

/// min D>=0(a*x1x2 + b1*x1 + b2*x2 + c) by the two-variable closed form,
/// with exact ceiling arithmetic. Requires a >= 1.
Frontier min_dgeq0_2var(const Int& a, const Int& b1, const Int& b2, const Int& c);

/// min D>=0(f) and D(f) for a square-free dominated polynomial with
/// positive leading coefficient and every declared variable occurring.
/// Variable-disjoint-decomposable inputs take the reducible path.
PolyEnumReport min_dgeq0_poly(const SqFreePoly& f, const EnumOptions& opts = {});

/// Combination step for variable-disjoint factors: single factor passes
/// through; otherwise the infinite family is described by the per-factor
/// reports and the materialized minimal witnesses.
PolyEnumReport reducible_combine(std::vector<FactorReport> factors, int nvars);

/// Minimal d with positive non-constant shifted coefficients and
/// f(d) >= alpha; alpha = 0 reproduces the standard frontier.
Frontier frontier_at_level(const SqFreePoly& f, const Int& alpha, const EnumOptions& opts = {});

/// Arithmetical structures of a dominated polynomial with arbitrary
/// bounded exponents: each variable is split into max-exponent many
/// copies, the square-free surrogate is enumerated, and the diagonal
/// vectors are projected back.
PolyEnumReport lift_non_squarefree(const GeneralPoly& F, const EnumOptions& opts = {});

} // namespace arith
