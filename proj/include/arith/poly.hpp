#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arith/int.hpp"
#include "arith/matrix.hpp"

namespace arith {

/// A monomial with 0/1 exponents: bit i set means variable i (0-based) occurs.
using Mask = std::uint64_t;

/// Multivariate polynomial whose exponents are all 0 or 1, stored as a
/// canonical map from variable subsets to nonzero coefficients.
class SqFreePoly {
public:
    explicit SqFreePoly(int nvars);

    int nvars() const { return nvars_; }
    Mask full_mask() const { return (Mask(1) << nvars_) - 1; }

    const std::map<Mask, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient of the given monomial; zero when absent.
    Int coef(Mask m) const;

    /// Accumulate c into the coefficient of m, dropping it if it becomes zero.
    void add_term(Mask m, const Int& c);

    /// Union of the supports of all terms.
    Mask support_union() const;

    SqFreePoly negated() const;
    /// f plus a constant (used for level sets D >= alpha).
    SqFreePoly plus_constant(const Int& delta) const;

    bool operator==(const SqFreePoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

private:
    int nvars_;
    std::map<Mask, Int> terms_;
};

/// Parse result: the polynomial plus its variable names in index order.
struct ParsedPoly {
    SqFreePoly poly;
    std::vector<std::string> vars;
};

/// Parse an expression over the grammar
///   expr := ["-"] term (("+"|"-") term)* ; term := factor ("*" factor)* ;
///   factor := INT | VAR ("^" INT)?
/// Variable order is declaration order when `declared` is given, otherwise
/// first-appearance order. Exponents other than a literal 1 raise
/// NotSquareFree; unknown variables raise UnknownVariable when a declaration
/// list is present.
ParsedPoly parse_sqfree(const std::string& text,
                        const std::optional<std::vector<std::string>>& declared = std::nullopt);

/// f_L(X) = det(Diag(X) - L); the coefficient of x_{I^c} is the principal
/// minor det((-L)[I;I]).
SqFreePoly charpoly_of_matrix(const IntMatrix& L);

/// f(X + d), via coef'(S) = sum_{T >= S} coef(T) * prod_{i in T\S} d_i.
SqFreePoly shift(const SqFreePoly& f, const IntVec& d);

/// d f / d x_s as a polynomial in the remaining variables (s is 1-based;
/// higher variable indices shift down by one).
SqFreePoly partial(const SqFreePoly& f, int s);

/// Exact value f(d).
Int eval(const SqFreePoly& f, const IntVec& d);

/// Substitute the value v for variable s (1-based); remaining variables are
/// re-indexed as in partial().
SqFreePoly substitute(const SqFreePoly& f, int s, const Int& v);

/// The monomial divisible by every monomial of f, or absent when none
/// exists. Throws ZeroPolynomial for f = 0.
std::optional<Mask> dominant_monomial(const SqFreePoly& f);

/// True iff the dominant-monomial coefficient is positive.
bool leading_positive(const SqFreePoly& f);

/// One factor of a variable-disjoint factorization: the polynomial in its
/// own compacted variables plus the 0-based parent positions they came from.
struct Factor {
    SqFreePoly poly;
    std::vector<int> vars;
};

/// The unique maximal factorization of f into variable-disjoint factors.
/// A singleton result means no variable-disjoint split exists. Requires f
/// dominated with every declared variable occurring in some term.
std::vector<Factor> variable_disjoint_factor(const SqFreePoly& f);

/// Value f(d) together with the n linear coefficients of f(X + d).
struct ShiftedLinearForm {
    Int value;
    IntVec lin;
};
ShiftedLinearForm shifted_linear_form(const SqFreePoly& f, const IntVec& d);

/// General polynomial with arbitrary non-negative exponents; the front end
/// for lifting non-square-free inputs.
struct GeneralPoly {
    int nvars = 0;
    std::map<std::vector<int>, Int> terms; // exponent vector -> nonzero coefficient
};

struct ParsedGeneralPoly {
    GeneralPoly poly;
    std::vector<std::string> vars;
};

/// Same grammar as parse_sqfree but exponents may be any positive integer.
ParsedGeneralPoly parse_general_poly(const std::string& text,
                                     const std::optional<std::vector<std::string>>& declared = std::nullopt);

} // namespace arith
