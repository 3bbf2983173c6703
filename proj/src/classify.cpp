#include "arith/classify.hpp"

#include <algorithm>

#include "arith/errors.hpp"

namespace arith {

ZClassification classify_z(const IntMatrix& M) {
    const int n = M.size();
    ZClassification out;
    out.det = det(M);
    out.is_z = true;
    for (int i = 0; i < n && out.is_z; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && M.at(i, j) > 0) { out.is_z = false; break; }
    if (!out.is_z) return out;

    bool proper_nonneg = true, proper_pos = true;
    for (Mask m = 1; m + 1 < (Mask(1) << n); ++m) { // proper nonempty subsets
        IndexSet I;
        for (int i = 0; i < n; ++i)
            if (m & (Mask(1) << i)) I.push_back(i + 1);
        Int minor = principal_minor(M, I);
        if (minor < 0) proper_nonneg = false;
        if (minor <= 0) proper_pos = false;
        if (!proper_nonneg) break;
    }
    out.proper_nonneg = proper_nonneg;
    out.proper_pos = proper_pos;
    out.all_minors_nonneg = proper_nonneg && out.det >= 0;
    out.all_minors_pos = proper_pos && out.det > 0;
    out.proper_pos_det_nonneg = proper_pos && out.det >= 0;
    return out;
}

bool is_arithmetical_d(const IntMatrix& L, const IntVec& d) {
    if (!L.is_non_negative() || !L.has_zero_diagonal())
        throw BadInput("matrix must be non-negative with zero diagonal");
    if (static_cast<int>(d.size()) != L.size()) throw DimensionMismatch("d length differs from matrix size");
    for (const Int& x : d)
        if (x <= 0) throw BadInput("d must be positive");
    const SqFreePoly fd = shift(charpoly_of_matrix(L), d);
    for (const auto& [m, c] : fd.terms())
        if (m != 0 && c <= 0) return false;
    return fd.coef(0) == 0;
}

Int critical_group_order(const SqFreePoly& f, const IntVec& d) {
    const SqFreePoly fd = shift(f, d);
    if (fd.coef(0) != 0) throw NotAStructure("f(d) != 0");
    for (const auto& [m, c] : fd.terms())
        if (m != 0 && c <= 0) throw NotAStructure("shifted polynomial has a non-positive proper coefficient");
    Int g = 0;
    for (int s = 0; s < f.nvars(); ++s) g = gcd(g, fd.coef(Mask(1) << s));
    if (g <= 0) throw NotAStructure("no positive linear coefficient");
    return g;
}

namespace {

// All divisors of x (both signs), ascending. x must be nonzero.
std::vector<Int> signed_divisors(const Int& x) {
    Int a = abs(x);
    std::vector<Int> pos;
    for (Int d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            pos.push_back(d);
            if (d * d != a) pos.push_back(divexact(a, d));
        }
    }
    std::sort(pos.begin(), pos.end());
    std::vector<Int> out;
    out.reserve(pos.size() * 2);
    for (auto it = pos.rbegin(); it != pos.rend(); ++it) out.push_back(-*it);
    for (const Int& d : pos) out.push_back(d);
    return out;
}

// det(Diag(X) - W) for the witness template expands to
//   x1x2x3 + (n1 c1) x1 + (n2 c2) x2 + (n3 c3) x3 + (c1 c2 c3 - n1 n2 n3).
IntMatrix witness_matrix(const Int& n1, const Int& n2, const Int& n3,
                         const Int& c1, const Int& c2, const Int& c3) {
    IntMatrix W(3);
    W.at(0, 1) = n3;
    W.at(0, 2) = -c2;
    W.at(1, 0) = -c3;
    W.at(1, 2) = n1;
    W.at(2, 0) = n2;
    W.at(2, 1) = -c1;
    return W;
}

} // namespace

std::optional<IntMatrix> mp3_membership(const Int& a1, const Int& a2, const Int& a3, const Int& b) {
    const Int prod = a1 * a2 * a3;
    if (prod == 0) {
        // One slot is free: put the coefficient 0 there and absorb b into the
        // opposite triangle. Works for every b, including b = 0.
        Int n[3] = {1, 1, 1};
        Int c[3] = {a1, a2, a3};
        for (int i = 0; i < 3; ++i)
            if (c[i] == 0) {
                n[i] = -b;
                c[i] = 0;
                break;
            }
        return witness_matrix(n[0], n[1], n[2], c[0], c[1], c[2]);
    }
    // b = prod/n - n must hold for some n = n1 n2 n3 with n_i | a_i; first
    // witness in lexicographic (n1, n2, n3) order for determinism.
    for (const Int& n1 : signed_divisors(a1))
        for (const Int& n2 : signed_divisors(a2))
            for (const Int& n3 : signed_divisors(a3)) {
                const Int n = n1 * n2 * n3;
                if (prod % n != 0) continue;
                if (divexact(prod, n) - n != b) continue;
                return witness_matrix(n1, n2, n3, divexact(a1, n1), divexact(a2, n2), divexact(a3, n3));
            }
    return std::nullopt;
}

} // namespace arith
