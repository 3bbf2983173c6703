#include "arith/matrix_enum.hpp"

#include <chrono>
#include <map>
#include <stdexcept>

#include "arith/classify.hpp"
#include "arith/errors.hpp"
#include "arith/poly.hpp"
#include "search_core.hpp"

namespace arith {

IntVec expand_vec(const IntVec& d, int s) {
    const int n = static_cast<int>(d.size()) + 1;
    if (s < 1 || s > n) throw IndexOutOfRange("insertion position outside 1..n");
    IntVec out;
    out.reserve(static_cast<std::size_t>(n));
    out.insert(out.end(), d.begin(), d.begin() + (s - 1));
    out.emplace_back(1);
    out.insert(out.end(), d.begin() + (s - 1), d.end());
    return out;
}

Frontier min_dgeq0_2x2(const Int& a, const Int& b) {
    if (a < 0 || b < 0) throw BadInput("off-diagonal entries must be non-negative");
    Frontier out(2);
    const Int ab = a * b;
    // walk the hyperbola d1*d2 >= ab block by block
    Int d = 1;
    for (;;) {
        Int e = ab == 0 ? Int(1) : ceil_div(ab, d);
        if (e < 1) e = 1;
        out.insert_min({d, e});
        if (e == 1) break;
        d = ceil_div(ab, e - 1); // first d whose partner drops below e
    }
    return out;
}

namespace {

void check_matrix_input(const IntMatrix& L) {
    if (!L.is_non_negative()) throw BadInput("matrix must be non-negative");
    if (!L.has_zero_diagonal()) throw BadInput("matrix must have zero diagonal");
}

using Memo = std::map<std::string, Frontier>;

std::vector<IntVec> start_points_from_subfrontiers(const IntMatrix& L,
                                                   const std::vector<Frontier>& subs) {
    const int n = L.size();
    std::vector<std::vector<IntVec>> sets;
    sets.reserve(static_cast<std::size_t>(n));
    for (int s = 1; s <= n; ++s) {
        std::vector<IntVec> expanded;
        expanded.reserve(subs[static_cast<std::size_t>(s - 1)].size());
        for (const IntVec& v : subs[static_cast<std::size_t>(s - 1)].elems())
            expanded.push_back(expand_vec(v, s));
        sets.push_back(std::move(expanded));
    }
    return detail::min_max_combinations(sets, n);
}

Frontier min_dgeq0_rec(const IntMatrix& L, Memo& memo, const EnumOptions& opts,
                       EnumStats& stats, bool top_level) {
    const int n = L.size();
    const std::string key = L.key();
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    Frontier out(n);
    if (n == 1) {
        out.insert_min({Int(1)});
    } else if (n == 2) {
        out = min_dgeq0_2x2(L.at(0, 1), L.at(1, 0));
    } else {
        std::vector<Frontier> subs;
        subs.reserve(static_cast<std::size_t>(n));
        for (int s = 1; s <= n; ++s)
            subs.push_back(min_dgeq0_rec(delete_rc(L, s), memo, opts, stats, false));
        std::vector<IntVec> starts = start_points_from_subfrontiers(L, subs);
        EnumOptions level_opts = opts;
        if (!top_level) level_opts.threads = 1; // fan out only at the outermost level
        out = detail::frontier_from_starts(charpoly_of_matrix(L), std::move(starts), level_opts, stats);
    }
    memo.emplace(key, out);
    return out;
}

} // namespace

Frontier min_completion(const IntMatrix& M) {
    // g_M(X) = det(Diag(X) + M); its non-constant coefficients are exactly
    // the proper principal minors of M and its constant term is det(M).
    const SqFreePoly g = charpoly_of_matrix(M.negate());
    for (const auto& [m, c] : g.terms())
        if (m != 0 && c <= 0)
            throw NotQuasiNonSingular("matrix has a non-positive proper principal minor");
    EnumStats stats;
    detail::SearchContext ctx{nullptr};
    Frontier out(M.size());
    for (const IntVec& e : detail::min_nonneg_completions(g, ctx, stats)) out.insert_min(e);
    return out;
}

std::vector<StartPoint> combination_start_points(const IntMatrix& L) {
    check_matrix_input(L);
    if (L.size() < 3) throw BadSize("combination stage requires n >= 3");
    Memo memo;
    EnumStats stats;
    EnumOptions opts;
    std::vector<Frontier> subs;
    for (int s = 1; s <= L.size(); ++s)
        subs.push_back(min_dgeq0_rec(delete_rc(L, s), memo, opts, stats, false));
    const SqFreePoly f = charpoly_of_matrix(L);
    std::vector<StartPoint> out;
    for (IntVec& d : start_points_from_subfrontiers(L, subs)) {
        Int dt = eval(f, d);
        out.push_back(StartPoint{std::move(d), std::move(dt)});
    }
    return out;
}

Frontier min_dgeq0_matrix(const IntMatrix& L, const EnumOptions& opts) {
    check_matrix_input(L);
    Memo memo;
    EnumStats stats;
    return min_dgeq0_rec(L, memo, opts, stats, true);
}

EnumReport arithmetical_structures(const IntMatrix& L, const EnumOptions& opts) {
    check_matrix_input(L);
    const auto t0 = std::chrono::steady_clock::now();
    EnumReport report;
    report.frontier = Frontier(L.size());
    if (L.has_zero_row()) {
        report.outcome = EnumOutcome::empty;
        return report;
    }
    if (!is_irreducible(L)) {
        report.outcome = EnumOutcome::infinite;
        return report;
    }
    Memo memo;
    report.outcome = EnumOutcome::finite;
    report.frontier = min_dgeq0_rec(L, memo, opts, report.stats, true);
    const SqFreePoly f = charpoly_of_matrix(L);
    for (const IntVec& d : report.frontier.elems()) {
        if (eval(f, d) != 0) continue;
        auto r = kernel_primitive(L.diag_minus(d));
        if (!r)
            throw std::logic_error("structure without a positive kernel vector; "
                                   "this contradicts the almost non-singular characterization");
        report.structures.push_back(ArithStructure{d, *r, critical_group_order(f, d)});
    }
    report.stats.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

} // namespace arith
