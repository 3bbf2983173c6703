#include "arith/solutions.hpp"

#include <algorithm>
#include <set>

#include "arith/classify.hpp"
#include "arith/errors.hpp"
#include "arith/poly_enum.hpp"

namespace arith {

namespace {

struct SliceResult {
    std::vector<IntVec> zeros;
    bool complete = true;
};

void check_deadline(const EnumOptions& opts) {
    if (opts.deadline && std::chrono::steady_clock::now() > *opts.deadline)
        throw TimeCapExceeded("time cap exceeded during slice search");
}

/// All positive integer zeros of r, recursively; `complete` records whether
/// every slice was resolved.
SliceResult solve_all_positive(const SqFreePoly& r, const EnumOptions& opts);

/// Zeros on the hyperplane x_s = v (1-based s), embedded back into
/// n-dimensional vectors.
SliceResult solve_slice(const SqFreePoly& f, int s, const Int& v, const EnumOptions& opts) {
    check_deadline(opts);
    const SqFreePoly r = substitute(f, s, v);
    SliceResult sub = solve_all_positive(r, opts);
    SliceResult out;
    out.complete = sub.complete;
    for (const IntVec& w : sub.zeros) {
        IntVec full;
        full.reserve(w.size() + 1);
        full.insert(full.end(), w.begin(), w.begin() + (s - 1));
        full.push_back(v);
        full.insert(full.end(), w.begin() + (s - 1), w.end());
        out.zeros.push_back(std::move(full));
    }
    return out;
}

SliceResult solve_all_positive(const SqFreePoly& r, const EnumOptions& opts) {
    SliceResult out;
    const int n = r.nvars();

    if (n == 0) {
        if (r.coef(0) == 0) out.zeros.push_back(IntVec{});
        return out;
    }
    if (r.is_zero()) {
        // identically zero on a positive orthant: infinitely many zeros
        out.complete = false;
        return out;
    }
    const Mask used = r.support_union();
    if (used != r.full_mask()) {
        // unused variables are free; any zero of the reduced polynomial
        // yields an infinite family
        SqFreePoly reduced(std::popcount(used));
        for (const auto& [m, c] : r.terms()) {
            Mask packed = 0;
            int j = 0;
            for (int i = 0; i < n; ++i) {
                if (!(used & (Mask(1) << i))) continue;
                if (m & (Mask(1) << i)) packed |= Mask(1) << j;
                ++j;
            }
            reduced.add_term(packed, c);
        }
        SliceResult sub = solve_all_positive(reduced, opts);
        out.complete = sub.complete && sub.zeros.empty();
        return out;
    }
    if (n == 1) {
        // a*x + c with a != 0: at most one root
        const Int a = r.coef(1);
        const Int c = r.coef(0);
        if (c % a == 0) {
            Int root = -divexact(c, a);
            if (root >= 1) out.zeros.push_back(IntVec{root});
        }
        return out;
    }

    SqFreePoly g = r;
    auto dom = dominant_monomial(g);
    if (!dom) {
        out.complete = false; // not dominated: outside the method (Pell-type)
        return out;
    }
    if (g.coef(*dom) < 0) {
        g = g.negated();
        dom = dominant_monomial(g);
    }
    if (variable_disjoint_factor(g).size() > 1) {
        out.complete = false; // reducible residual: infinite solution family
        return out;
    }

    PolyEnumReport rep = min_dgeq0_poly(g, opts);
    for (const PolyStructure& s : rep.structures) out.zeros.push_back(s.d);
    for (int s = 1; s <= n; ++s) {
        const Int bound = rep.frontier.max_coord(s - 1);
        for (Int v = 1; v < bound; ++v) {
            SliceResult sub = solve_slice(g, s, v, opts);
            out.complete = out.complete && sub.complete;
            out.zeros.insert(out.zeros.end(), sub.zeros.begin(), sub.zeros.end());
        }
    }
    std::sort(out.zeros.begin(), out.zeros.end(), vec_lex_less);
    out.zeros.erase(std::unique(out.zeros.begin(), out.zeros.end()), out.zeros.end());
    return out;
}

std::uint64_t checked_box_volume(const IntVec& box, std::uint64_t cap) {
    if (box.empty()) throw BadInput("box must have at least one coordinate");
    Int volume = 1;
    for (const Int& b : box) {
        if (b < 1) throw BadInput("box bounds must be >= 1");
        volume *= b;
    }
    if (volume > Int(static_cast<unsigned long>(cap)))
        throw BoxTooLarge("box volume " + volume.get_str() + " exceeds cap " + std::to_string(cap));
    return volume.get_ui();
}

std::string box_region(const IntVec& box) {
    std::string s = "box ";
    for (std::size_t i = 0; i < box.size(); ++i) {
        if (i) s += " x ";
        s += "[1," + box[i].get_str() + "]";
    }
    return s;
}

template <typename Visit>
void scan_box(const IntVec& box, Visit&& visit) {
    IntVec d(box.size(), Int(1));
    for (;;) {
        visit(d);
        std::size_t k = d.size();
        while (k-- > 0) {
            if (d[k] < box[k]) {
                ++d[k];
                for (std::size_t j = k + 1; j < d.size(); ++j) d[j] = 1;
                break;
            }
            if (k == 0) return;
        }
    }
}

} // namespace

SolutionSet slice_solve(const SqFreePoly& f, const Frontier& frontier, const EnumOptions& opts) {
    if (frontier.dim() != f.nvars()) throw DimensionMismatch("frontier dimension differs from nvars");
    auto dom = dominant_monomial(f);
    if (!dom) throw NotDominated("polynomial has no dominant monomial");
    if (*dom != f.full_mask()) throw VariableUnused("some declared variable occurs in no term");
    if (f.coef(*dom) <= 0) throw NegativeLeading("leading coefficient must be positive");

    SolutionSet out;
    out.complete = true;
    out.region = "positive vectors not dominating any frontier element";

    if (variable_disjoint_factor(f).size() > 1) {
        out.complete = false;
        out.region += "; reducible input, slice search not applicable";
        return out;
    }

    std::set<IntVec, decltype(&vec_lex_less)> found(&vec_lex_less);
    const int n = f.nvars();
    for (int s = 1; s <= n; ++s) {
        const Int bound = frontier.max_coord(s - 1);
        for (Int v = 1; v < bound; ++v) {
            SliceResult sub = solve_slice(f, s, v, opts);
            out.complete = out.complete && sub.complete;
            for (IntVec& z : sub.zeros) found.insert(std::move(z));
        }
    }
    out.solutions.assign(found.begin(), found.end());
    return out;
}

MatrixBoxResult brute_force_box(const IntMatrix& L, const IntVec& box, std::uint64_t box_cap) {
    if (!L.has_zero_diagonal()) throw BadInput("matrix must have zero diagonal");
    if (static_cast<int>(box.size()) != L.size())
        throw DimensionMismatch("box dimension differs from matrix size");
    checked_box_volume(box, box_cap);

    const SqFreePoly f = charpoly_of_matrix(L);
    MatrixBoxResult out;
    out.complete = true;
    out.region = box_region(box) + ", d with a positive primitive kernel vector";
    scan_box(box, [&](const IntVec& d) {
        if (eval(f, d) != 0) return;
        const IntMatrix M = L.diag_minus(d);
        if (rank(M) != L.size() - 1) return; // kernel dimension != 1
        auto r = kernel_primitive(M);
        if (!r) return;
        Int k = 0;
        const ShiftedLinearForm slf = shifted_linear_form(f, d);
        for (const Int& c : slf.lin) k = gcd(k, c);
        out.structures.push_back(ArithStructure{d, std::move(*r), std::move(k)});
    });
    return out;
}

SolutionSet brute_force_box(const SqFreePoly& f, const IntVec& box, std::uint64_t box_cap) {
    if (static_cast<int>(box.size()) != f.nvars())
        throw DimensionMismatch("box dimension differs from nvars");
    checked_box_volume(box, box_cap);
    SolutionSet out;
    out.complete = true;
    out.region = box_region(box);
    scan_box(box, [&](const IntVec& d) {
        if (eval(f, d) == 0) out.solutions.push_back(d);
    });
    return out;
}

} // namespace arith
