#include "arith/matrix.hpp"

#include <algorithm>
#include <utility>

#include "arith/errors.hpp"

namespace arith {

IntMatrix::IntMatrix(int n) : n_(n) {
    if (n < 1) throw BadInput("matrix size must be >= 1");
    e_.assign(static_cast<std::size_t>(n) * n, Int(0));
}

IntMatrix::IntMatrix(int n, std::vector<Int> entries) : n_(n), e_(std::move(entries)) {
    if (n < 1) throw BadInput("matrix size must be >= 1");
    if (e_.size() != static_cast<std::size_t>(n) * n)
        throw DimensionMismatch("entry count does not match matrix size");
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diag(const IntVec& d) {
    IntMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.size(); ++i) m.at(i, i) = d[static_cast<std::size_t>(i)];
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    int n = static_cast<int>(rows.size());
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (rows[static_cast<std::size_t>(i)].size() != static_cast<std::size_t>(n))
            throw DimensionMismatch("matrix rows must all have length n");
        for (int j = 0; j < n; ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::negate() const {
    IntMatrix t(n_);
    for (std::size_t k = 0; k < e_.size(); ++k) t.e_[k] = -e_[k];
    return t;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (n_ != o.n_) throw DimensionMismatch("matrix sizes differ");
    IntMatrix t(n_);
    for (std::size_t k = 0; k < e_.size(); ++k) t.e_[k] = e_[k] + o.e_[k];
    return t;
}

IntMatrix IntMatrix::diag_minus(const IntVec& d) const {
    if (static_cast<int>(d.size()) != n_) throw DimensionMismatch("diagonal length differs from matrix size");
    IntMatrix t = negate();
    for (int i = 0; i < n_; ++i) t.at(i, i) += d[static_cast<std::size_t>(i)];
    return t;
}

bool IntMatrix::is_non_negative() const {
    for (const Int& x : e_)
        if (x < 0) return false;
    return true;
}

bool IntMatrix::has_zero_diagonal() const {
    for (int i = 0; i < n_; ++i)
        if (at(i, i) != 0) return false;
    return true;
}

bool IntMatrix::has_zero_row() const {
    for (int i = 0; i < n_; ++i) {
        bool all_zero = true;
        for (int j = 0; j < n_ && all_zero; ++j)
            if (at(i, j) != 0) all_zero = false;
        if (all_zero) return true;
    }
    return false;
}

IntVec IntMatrix::row_sums() const {
    IntVec s(static_cast<std::size_t>(n_), Int(0));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) s[static_cast<std::size_t>(i)] += at(i, j);
    return s;
}

std::string IntMatrix::key() const {
    std::string k = std::to_string(n_);
    for (const Int& x : e_) {
        k += ';';
        k += x.get_str();
    }
    return k;
}

namespace {

// Fraction-free elimination in place; returns {rank, det}. The determinant
// is only meaningful when rank == n (it is 0 otherwise), which is exactly
// how Bareiss behaves when a zero column is met.
std::pair<int, Int> bareiss(std::vector<Int>& a, int n) {
    Int sign = 1;
    Int prev = 1;
    int r = 0;
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int piv = -1;
        for (int i = row; i < n; ++i)
            if (a[static_cast<std::size_t>(i) * n + col] != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != row) {
            for (int j = 0; j < n; ++j)
                std::swap(a[static_cast<std::size_t>(piv) * n + j], a[static_cast<std::size_t>(row) * n + j]);
            sign = -sign;
        }
        const Int pivot = a[static_cast<std::size_t>(row) * n + col];
        for (int i = row + 1; i < n; ++i) {
            for (int j = col + 1; j < n; ++j) {
                Int t = a[static_cast<std::size_t>(i) * n + j] * pivot -
                        a[static_cast<std::size_t>(i) * n + col] * a[static_cast<std::size_t>(row) * n + j];
                a[static_cast<std::size_t>(i) * n + j] = divexact(t, prev);
            }
            a[static_cast<std::size_t>(i) * n + col] = 0;
        }
        prev = pivot;
        ++row;
        ++r;
    }
    if (r < n) return {r, Int(0)};
    return {r, Int(sign * a[static_cast<std::size_t>(n) * n - 1])};
}

} // namespace

Int det(const IntMatrix& M) {
    std::vector<Int> a = M.entries();
    return bareiss(a, M.size()).second;
}

int rank(const IntMatrix& M) {
    std::vector<Int> a = M.entries();
    return bareiss(a, M.size()).first;
}

Int principal_minor(const IntMatrix& M, const IndexSet& I) {
    const int n = M.size();
    if (I.empty()) throw IndexOutOfRange("index set must be nonempty");
    std::vector<int> idx(I);
    std::sort(idx.begin(), idx.end());
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (idx[k] < 1 || idx[k] > n) throw IndexOutOfRange("index outside 1..n");
        if (k > 0 && idx[k] == idx[k - 1]) throw IndexOutOfRange("duplicate index");
    }
    const int m = static_cast<int>(idx.size());
    std::vector<Int> a;
    a.reserve(static_cast<std::size_t>(m) * m);
    for (int i : idx)
        for (int j : idx) a.push_back(M.at(i - 1, j - 1));
    return bareiss(a, m).second;
}

IntMatrix delete_rc(const IntMatrix& M, int s) {
    const int n = M.size();
    if (s < 1 || s > n) throw IndexOutOfRange("row/column index outside 1..n");
    if (n < 2) throw IndexOutOfRange("cannot delete from a 1x1 matrix");
    IntMatrix t(n - 1);
    for (int i = 0, ti = 0; i < n; ++i) {
        if (i == s - 1) continue;
        for (int j = 0, tj = 0; j < n; ++j) {
            if (j == s - 1) continue;
            t.at(ti, tj) = M.at(i, j);
            ++tj;
        }
        ++ti;
    }
    return t;
}

bool is_irreducible(const IntMatrix& M) {
    const int n = M.size();
    if (n == 1) return true;
    // reachability from vertex 0 along arcs and along reversed arcs
    for (int pass = 0; pass < 2; ++pass) {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w) {
                if (w == v || seen[static_cast<std::size_t>(w)]) continue;
                const Int& entry = pass == 0 ? M.at(v, w) : M.at(w, v);
                if (entry != 0) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
        for (char c : seen)
            if (!c) return false;
    }
    return true;
}

std::optional<IntVec> kernel_primitive(const IntMatrix& M) {
    const int n = M.size();
    // Exact elimination over rationals (integer pairs via mpq).
    std::vector<mpq_class> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = M.at(i, j);

    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int piv = -1;
        for (int i = row; i < n; ++i)
            if (a[static_cast<std::size_t>(i) * n + col] != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < n; ++j)
                std::swap(a[static_cast<std::size_t>(piv) * n + j], a[static_cast<std::size_t>(row) * n + j]);
        const mpq_class p = a[static_cast<std::size_t>(row) * n + col];
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(row) * n + j] /= p;
        for (int i = 0; i < n; ++i) {
            if (i == row) continue;
            const mpq_class f = a[static_cast<std::size_t>(i) * n + col];
            if (f == 0) continue;
            for (int j = 0; j < n; ++j)
                a[static_cast<std::size_t>(i) * n + j] -= f * a[static_cast<std::size_t>(row) * n + j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    if (row != n - 1) throw KernelDimension("kernel dimension is not 1");

    std::vector<char> is_pivot(static_cast<std::size_t>(n), 0);
    for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = 1;
    int free_col = 0;
    while (is_pivot[static_cast<std::size_t>(free_col)]) ++free_col;

    std::vector<mpq_class> x(static_cast<std::size_t>(n), mpq_class(0));
    x[static_cast<std::size_t>(free_col)] = 1;
    for (int r = 0; r < n - 1; ++r)
        x[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(r)])] =
            -a[static_cast<std::size_t>(r) * n + free_col];

    // Clear denominators, then divide by the gcd.
    Int lcm = 1;
    for (const mpq_class& q : x) {
        Int l;
        mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
        lcm = l;
    }
    IntVec r(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        mpq_class scaled = x[static_cast<std::size_t>(i)] * mpq_class(lcm);
        r[static_cast<std::size_t>(i)] = scaled.get_num(); // denominator is 1
    }
    Int g = vec_gcd(r);
    if (g != 0)
        for (Int& v : r) v = divexact(v, g);
    // Sign convention: first nonzero entry positive.
    for (const Int& v : r) {
        if (v == 0) continue;
        if (v < 0)
            for (Int& w : r) w = -w;
        break;
    }
    for (const Int& v : r)
        if (v <= 0) return std::nullopt;
    return r;
}

} // namespace arith
