#include "arith/poly_enum.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "arith/classify.hpp"
#include "arith/errors.hpp"
#include "arith/matrix_enum.hpp"
#include "search_core.hpp"

namespace arith {

Frontier min_dgeq0_2var(const Int& a, const Int& b1, const Int& b2, const Int& c) {
    if (a < 1) throw BadLeadingCoefficient("leading coefficient must be >= 1");
    Int d1p = ceil_div(1 - b2, a);
    if (d1p < 1) d1p = 1;
    Int d2p = ceil_div(1 - b1, a);
    if (d2p < 1) d2p = 1;
    // denominators a*d + b2 (for d >= d1p) and a*d2p + b1 are >= 1
    Int upper = ceil_div(-(c + b2 * d2p), a * d2p + b1);
    if (upper < d1p) upper = d1p;

    Frontier out(2);
    Int d = d1p;
    while (d <= upper) {
        Int e = ceil_div(-(c + b1 * d), a * d + b2);
        if (e < d2p) e = d2p;
        out.insert_min({d, e});
        if (e == d2p) break; // larger d only repeats the floor and is dominated
        // first d whose partner drops below e:
        //   -(c + b1 d') <= (e-1)(a d' + b2)  <=>  d' >= -(c + (e-1) b2) / ((e-1) a + b1)
        Int next = ceil_div(-(c + (e - 1) * b2), (e - 1) * a + b1);
        if (next <= d) next = d + 1;
        d = next;
    }
    return out;
}

namespace {

void validate_poly_input(const SqFreePoly& f) {
    auto dom = dominant_monomial(f); // throws ZeroPolynomial for f = 0
    if (!dom) throw NotDominated("polynomial has no dominant monomial");
    if (*dom != f.full_mask()) throw VariableUnused("some declared variable occurs in no term");
    if (f.coef(*dom) <= 0)
        throw NegativeLeading("polynomials with non-positive leading coefficient "
                              "have no arithmetical structures");
}

/// Runs fn once per choice vector; sizes must all be >= 1.
template <typename Fn>
void for_each_pick(const std::vector<std::size_t>& sizes, Fn&& fn) {
    std::vector<std::size_t> pick(sizes.size(), 0);
    for (;;) {
        fn(pick);
        std::size_t k = 0;
        while (k < pick.size() && ++pick[k] == sizes[k]) pick[k++] = 0;
        if (k == pick.size()) break;
    }
}

Frontier irr_frontier(const SqFreePoly& f, const EnumOptions& opts, EnumStats& stats, bool top_level);

/// min W(q) for a derivative q: minimal v with all non-constant coefficients
/// of q(X+v) positive and q(v) >= 0. Across variable-disjoint factors the
/// cross terms force every factor's shifted constant to be strictly
/// positive, so each factor contributes its level-1 frontier.
Frontier min_w_set(const SqFreePoly& q, const EnumOptions& opts, EnumStats& stats) {
    std::vector<Factor> factors = variable_disjoint_factor(q);
    if (factors.size() == 1) return irr_frontier(q, opts, stats, false);

    std::vector<std::vector<IntVec>> parts;
    std::vector<std::size_t> sizes;
    parts.reserve(factors.size());
    for (const Factor& fac : factors) {
        parts.push_back(irr_frontier(fac.poly.plus_constant(Int(-1)), opts, stats, false).elems());
        sizes.push_back(parts.back().size());
    }
    Frontier out(q.nvars());
    for_each_pick(sizes, [&](const std::vector<std::size_t>& pick) {
        IntVec v(static_cast<std::size_t>(q.nvars()), Int(0));
        for (std::size_t i = 0; i < factors.size(); ++i) {
            const IntVec& part = parts[i][pick[i]];
            for (std::size_t j = 0; j < part.size(); ++j)
                v[static_cast<std::size_t>(factors[i].vars[j])] = part[j];
        }
        out.insert_min(v);
    });
    return out;
}

Frontier irr_frontier(const SqFreePoly& f, const EnumOptions& opts, EnumStats& stats, bool top_level) {
    const int n = f.nvars();
    if (n == 1) {
        const Int a = f.coef(1);
        const Int c = f.coef(0);
        Int d = ceil_div(-c, a);
        if (d < 1) d = 1;
        Frontier out(1);
        out.insert_min({d});
        return out;
    }
    if (n == 2) return min_dgeq0_2var(f.coef(3), f.coef(1), f.coef(2), f.coef(0));

    std::vector<std::vector<IntVec>> sets;
    sets.reserve(static_cast<std::size_t>(n));
    for (int s = 1; s <= n; ++s) {
        Frontier sub = min_w_set(partial(f, s), opts, stats);
        std::vector<IntVec> expanded;
        expanded.reserve(sub.size());
        for (const IntVec& v : sub.elems()) expanded.push_back(expand_vec(v, s));
        sets.push_back(std::move(expanded));
    }
    std::vector<IntVec> starts = detail::min_max_combinations(sets, n);
    EnumOptions level_opts = opts;
    if (!top_level) level_opts.threads = 1;
    return detail::frontier_from_starts(f, std::move(starts), level_opts, stats);
}

std::vector<PolyStructure> structures_of(const SqFreePoly& f, const Frontier& frontier) {
    std::vector<PolyStructure> out;
    for (const IntVec& d : frontier.elems()) {
        if (eval(f, d) != 0) continue;
        out.push_back(PolyStructure{d, critical_group_order(f, d)});
    }
    return out;
}

IntVec embed(const IntVec& part, const std::vector<int>& vars, int nvars) {
    IntVec v(static_cast<std::size_t>(nvars), Int(1));
    for (std::size_t j = 0; j < part.size(); ++j) v[static_cast<std::size_t>(vars[j])] = part[j];
    return v;
}

} // namespace

PolyEnumReport reducible_combine(std::vector<FactorReport> factors, int nvars) {
    PolyEnumReport report;
    report.frontier = Frontier(nvars);
    if (factors.size() == 1) {
        const FactorReport& fr = factors.front();
        for (const IntVec& v : fr.frontier.elems())
            report.frontier.insert_min(embed(v, fr.vars, nvars));
        for (const PolyStructure& s : fr.structures)
            report.structures.push_back(PolyStructure{embed(s.d, fr.vars, nvars), s.k_order});
        return report;
    }

    report.reducible = true;
    report.infinite = true;

    const std::size_t k = factors.size();
    bool all_nonempty = true;
    std::vector<std::size_t> sizes(k);
    for (std::size_t i = 0; i < k; ++i) {
        sizes[i] = factors[i].frontier.size();
        if (sizes[i] == 0) all_nonempty = false;
    }

    auto place = [&](IntVec& v, std::size_t i, const IntVec& part) {
        for (std::size_t j = 0; j < part.size(); ++j)
            v[static_cast<std::size_t>(factors[i].vars[j])] = part[j];
    };

    // minimal elements of the per-factor D>=0 region
    if (all_nonempty) {
        for_each_pick(sizes, [&](const std::vector<std::size_t>& pick) {
            IntVec v(static_cast<std::size_t>(nvars), Int(1));
            for (std::size_t i = 0; i < k; ++i) place(v, i, factors[i].frontier.elems()[pick[i]]);
            report.frontier.insert_min(v);
        });
    }

    // witnesses: one factor vanishes on a D element, the others take any
    // frontier element
    std::set<IntVec> witnesses;
    if (all_nonempty) {
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<std::size_t> wsizes(sizes);
            wsizes[i] = factors[i].structures.size();
            if (wsizes[i] == 0) continue;
            for_each_pick(wsizes, [&](const std::vector<std::size_t>& pick) {
                IntVec v(static_cast<std::size_t>(nvars), Int(1));
                for (std::size_t j = 0; j < k; ++j) {
                    if (j == i) place(v, j, factors[j].structures[pick[j]].d);
                    else place(v, j, factors[j].frontier.elems()[pick[j]]);
                }
                witnesses.insert(std::move(v));
            });
        }
    }
    report.witnesses.assign(witnesses.begin(), witnesses.end());
    std::sort(report.witnesses.begin(), report.witnesses.end(), vec_lex_less);
    report.factors = std::move(factors);
    return report;
}

PolyEnumReport min_dgeq0_poly(const SqFreePoly& f, const EnumOptions& opts) {
    validate_poly_input(f);
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<Factor> factors = variable_disjoint_factor(f);
    PolyEnumReport report;
    EnumStats stats;
    if (factors.size() == 1) {
        report.frontier = irr_frontier(f, opts, stats, true);
        report.structures = structures_of(f, report.frontier);
    } else {
        std::vector<FactorReport> frs;
        frs.reserve(factors.size());
        for (Factor& fac : factors) {
            FactorReport fr;
            fr.frontier = irr_frontier(fac.poly, opts, stats, false);
            fr.structures = structures_of(fac.poly, fr.frontier);
            fr.factor = std::move(fac.poly);
            fr.vars = std::move(fac.vars);
            frs.push_back(std::move(fr));
        }
        report = reducible_combine(std::move(frs), f.nvars());
    }
    report.stats = stats;
    report.stats.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

Frontier frontier_at_level(const SqFreePoly& f, const Int& alpha, const EnumOptions& opts) {
    return min_dgeq0_poly(f.plus_constant(-alpha), opts).frontier;
}

PolyEnumReport lift_non_squarefree(const GeneralPoly& F, const EnumOptions& opts) {
    if (F.terms.empty()) throw ZeroPolynomial("the zero polynomial has no monomials");
    const int m = F.nvars;
    std::vector<int> delta(static_cast<std::size_t>(m), 0);
    for (const auto& [expo, c] : F.terms)
        for (int i = 0; i < m; ++i)
            delta[static_cast<std::size_t>(i)] =
                std::max(delta[static_cast<std::size_t>(i)], expo[static_cast<std::size_t>(i)]);
    for (int i = 0; i < m; ++i)
        if (delta[static_cast<std::size_t>(i)] == 0)
            throw VariableUnused("some declared variable occurs in no term");
    // dominated <=> the componentwise-max exponent vector is itself a term
    if (!F.terms.count(delta)) throw NotDominated("polynomial has no dominant monomial");

    std::vector<int> offset(static_cast<std::size_t>(m), 0);
    int total = 0;
    for (int i = 0; i < m; ++i) {
        offset[static_cast<std::size_t>(i)] = total;
        total += delta[static_cast<std::size_t>(i)];
    }
    if (total > 62) throw BadInput("lifted polynomial needs more than 62 variables");

    // x_i^a maps onto the first a copies of the split variable
    SqFreePoly f(total);
    for (const auto& [expo, c] : F.terms) {
        Mask mask = 0;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < expo[static_cast<std::size_t>(i)]; ++j)
                mask |= Mask(1) << (offset[static_cast<std::size_t>(i)] + j);
        f.add_term(mask, c);
    }

    PolyEnumReport full = min_dgeq0_poly(f, opts);
    auto project = [&](const IntVec& v) -> std::optional<IntVec> {
        IntVec p(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            const int off = offset[static_cast<std::size_t>(i)];
            const Int& first = v[static_cast<std::size_t>(off)];
            for (int j = 1; j < delta[static_cast<std::size_t>(i)]; ++j)
                if (v[static_cast<std::size_t>(off + j)] != first) return std::nullopt;
            p[static_cast<std::size_t>(i)] = first;
        }
        return p;
    };

    PolyEnumReport out;
    out.reducible = full.reducible;
    out.infinite = full.infinite;
    out.stats = full.stats;
    out.frontier = Frontier(m);
    for (const IntVec& v : full.frontier.elems())
        if (auto p = project(v)) out.frontier.insert_min(*p);
    for (const PolyStructure& s : full.structures)
        if (auto p = project(s.d)) out.structures.push_back(PolyStructure{*p, s.k_order});
    for (const IntVec& w : full.witnesses)
        if (auto p = project(w)) out.witnesses.push_back(*p);
    return out;
}

} // namespace arith
