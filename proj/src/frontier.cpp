#include "arith/frontier.hpp"

#include <algorithm>
#include <climits>

#include "arith/errors.hpp"

namespace arith {

Frontier::Frontier(int dim) : dim_(dim) {
    if (dim < 0) throw DimensionMismatch("frontier dimension must be >= 0");
}

void Frontier::check_dim(const IntVec& v) const {
    if (static_cast<int>(v.size()) != dim_)
        throw DimensionMismatch("vector dimension does not match frontier");
    for (const Int& x : v)
        if (x < 0) throw BadInput("frontier vectors must be non-negative");
}

std::vector<long> Frontier::shadow_of(const IntVec& v) {
    std::vector<long> s(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        s[i] = v[i].fits_slong_p() ? v[i].get_si() : kBig;
    return s;
}

bool Frontier::leq_shadowed(const IntVec& a, const std::vector<long>& sa,
                            const IntVec& b, const std::vector<long>& sb) {
    for (std::size_t i = 0; i < sa.size(); ++i) {
        const long x = sa[i];
        const long y = sb[i];
        if (x != kBig) {
            if (y != kBig) {
                if (x > y) return false;
            }
            // y huge: x <= y holds
        } else {
            if (y != kBig) return false;          // a_i huge, b_i small
            if (cmp(a[i], b[i]) > 0) return false; // both huge: exact compare
        }
    }
    return true;
}

bool Frontier::dominates_some(const IntVec& v) const {
    check_dim(v);
    const std::vector<long> sv = shadow_of(v);
    // only lexicographically smaller-or-equal elements can dominate v
    auto end = std::upper_bound(elems_.begin(), elems_.end(), v, vec_lex_less);
    const std::size_t stop = static_cast<std::size_t>(end - elems_.begin());
    for (std::size_t k = 0; k < stop; ++k)
        if (leq_shadowed(elems_[k], shadow_[k], v, sv)) return true;
    return false;
}

bool Frontier::insert_min(const IntVec& v) {
    check_dim(v);
    const std::vector<long> sv = shadow_of(v);
    auto it = std::lower_bound(elems_.begin(), elems_.end(), v, vec_lex_less);
    const std::size_t pos = static_cast<std::size_t>(it - elems_.begin());
    if (pos < elems_.size() && elems_[pos] == v) return false; // already present
    for (std::size_t k = 0; k < pos; ++k)
        if (leq_shadowed(elems_[k], shadow_[k], v, sv)) return false;
    // erase elements dominated by v; they all lie at or after pos
    std::size_t w = pos;
    for (std::size_t k = pos; k < elems_.size(); ++k) {
        if (leq_shadowed(v, sv, elems_[k], shadow_[k])) continue;
        if (w != k) {
            elems_[w] = std::move(elems_[k]);
            shadow_[w] = std::move(shadow_[k]);
        }
        ++w;
    }
    elems_.resize(w);
    shadow_.resize(w);
    elems_.insert(elems_.begin() + static_cast<std::ptrdiff_t>(pos), v);
    shadow_.insert(shadow_.begin() + static_cast<std::ptrdiff_t>(pos), sv);
    return true;
}

Frontier Frontier::merge(const Frontier& a, const Frontier& b) {
    if (a.dim_ != b.dim_) throw DimensionMismatch("frontier dimensions differ");
    Frontier out = a.size() >= b.size() ? a : b;
    const Frontier& other = a.size() >= b.size() ? b : a;
    for (const IntVec& v : other.elems_) out.insert_min(v);
    return out;
}

Int Frontier::max_coord(int i) const {
    if (i < 0 || i >= dim_) throw IndexOutOfRange("coordinate outside frontier dimension");
    Int m = 0;
    for (const IntVec& v : elems_)
        if (v[static_cast<std::size_t>(i)] > m) m = v[static_cast<std::size_t>(i)];
    return m;
}

} // namespace arith
