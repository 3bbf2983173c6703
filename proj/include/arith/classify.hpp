#pragma once

#include <optional>

#include "arith/int.hpp"
#include "arith/matrix.hpp"
#include "arith/poly.hpp"

namespace arith {

/// Z-matrix taxonomy flags, all derived from exact principal minors.
struct ZClassification {
    bool is_z = false;
    Int det = 0;
    bool all_minors_nonneg = false;     // M-matrix
    bool all_minors_pos = false;        // non-singular M-matrix
    bool proper_pos_det_nonneg = false; // almost non-singular M-matrix
    bool proper_nonneg = false;         // quasi M-matrix
    bool proper_pos = false;            // quasi non-singular M-matrix
};

/// Classifies by enumerating all 2^n - 1 principal minors. This is the
/// reference implementation; the enumerators avoid the exponential cost
/// through the coefficient recursion.
ZClassification classify_z(const IntMatrix& M);

/// True iff every non-constant coefficient of f_{L,d} is positive and the
/// constant term is zero. L must be non-negative with zero diagonal, d > 0.
bool is_arithmetical_d(const IntMatrix& L, const IntVec& d);

/// |K(f,d)|: gcd of the linear coefficients of f(X + d). Requires d to be
/// an arithmetical structure of f.
Int critical_group_order(const SqFreePoly& f, const IntVec& d);

/// Membership of x1x2x3 + a1x1 + a2x2 + a3x3 + b in MP[X] for three
/// variables: returns a witness matrix W with zero diagonal such that
/// charpoly_of_matrix(W) equals the polynomial, or absent when no witness
/// exists. Every b admits a witness when a1*a2*a3 = 0.
std::optional<IntMatrix> mp3_membership(const Int& a1, const Int& a2, const Int& a3, const Int& b);

} // namespace arith
