#pragma once

#include <optional>
#include <vector>

#include "arith/int.hpp"

namespace arith {

/// Square matrix of arbitrary-precision integers, row-major.
/// Row/column indices in the public operations below are 1-based,
/// matching the usual mathematical convention for principal minors.
class IntMatrix {
public:
    explicit IntMatrix(int n);
    IntMatrix(int n, std::vector<Int> entries);

    static IntMatrix identity(int n);
    static IntMatrix diag(const IntVec& d);
    /// Convenience constructor from row-major long literals.
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    int size() const { return n_; }

    const Int& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; } // 0-based
    Int& at(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }

    const std::vector<Int>& entries() const { return e_; }

    bool operator==(const IntMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }

    IntMatrix transpose() const;
    IntMatrix negate() const;
    IntMatrix operator+(const IntMatrix& o) const;

    /// Diag(d) - (*this); d must have length n.
    IntMatrix diag_minus(const IntVec& d) const;

    bool is_non_negative() const;
    bool has_zero_diagonal() const;
    bool has_zero_row() const;
    /// Row sums, i.e. L*1.
    IntVec row_sums() const;

    /// Stable byte key for memoization maps.
    std::string key() const;

private:
    int n_;
    std::vector<Int> e_;
};

/// Subset of {1,...,n} selecting rows/columns of a principal submatrix.
using IndexSet = std::vector<int>;

/// Exact determinant via fraction-free (Bareiss) elimination.
Int det(const IntMatrix& M);

/// Rank over Q, counted as nonzero pivots of the fraction-free elimination.
int rank(const IntMatrix& M);

/// Determinant of the principal submatrix M[I;I]. I must be a nonempty
/// subset of {1,...,n}; duplicates and out-of-range entries are rejected.
Int principal_minor(const IntMatrix& M, const IndexSet& I);

/// The (n-1)x(n-1) matrix obtained by erasing row and column s (1-based).
IntMatrix delete_rc(const IntMatrix& M, int s);

/// True iff the digraph with an arc i->j whenever the off-diagonal entry
/// (i,j) is nonzero is strongly connected. True for n = 1 by convention.
bool is_irreducible(const IntMatrix& M);

/// Primitive integer generator of ker(M) for a matrix of rank n-1, with the
/// first nonzero entry normalized positive. Returns the vector when all of
/// its entries are positive, absent otherwise. Throws KernelDimension when
/// the kernel is not one-dimensional.
std::optional<IntVec> kernel_primitive(const IntMatrix& M);

} // namespace arith
