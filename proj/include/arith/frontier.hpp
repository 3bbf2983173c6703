#pragma once

#include <vector>

#include "arith/int.hpp"

namespace arith {

/// Antichain of non-negative integer vectors under componentwise <=,
/// kept in lexicographic order. Enumeration frontiers hold positive
/// vectors; completion sets additionally allow zero entries.
///
/// The representation is a flat sorted list with linear dominance scans;
/// a parallel array of word-sized shadows keeps the scans cheap when the
/// entries fit in a machine word (they are compared exactly either way).
class Frontier {
public:
    explicit Frontier(int dim);

    int dim() const { return dim_; }
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    const std::vector<IntVec>& elems() const { return elems_; }

    /// True iff some element u satisfies u <= v.
    bool dominates_some(const IntVec& v) const;

    /// Insert v unless dominated; erase every element >= v. Returns true
    /// when v was inserted.
    bool insert_min(const IntVec& v);

    /// Minimal elements of the union.
    static Frontier merge(const Frontier& a, const Frontier& b);

    /// Largest value of coordinate i (0-based) over all elements; 0 if empty.
    Int max_coord(int i) const;

    bool operator==(const Frontier& o) const { return dim_ == o.dim_ && elems_ == o.elems_; }

private:
    static constexpr long kBig = -1; // shadow marker: entry exceeds long range

    void check_dim(const IntVec& v) const;
    static std::vector<long> shadow_of(const IntVec& v);
    static bool leq_shadowed(const IntVec& a, const std::vector<long>& sa,
                             const IntVec& b, const std::vector<long>& sb);

    int dim_;
    std::vector<IntVec> elems_;            // lexicographically sorted
    std::vector<std::vector<long>> shadow_; // parallel to elems_
};

} // namespace arith
