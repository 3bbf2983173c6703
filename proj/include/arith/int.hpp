#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace arith {

/// Arbitrary-precision integer; every computation in this library is exact.
using Int = mpz_class;
using IntVec = std::vector<Int>;

inline Int divexact(const Int& a, const Int& b) {
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

/// ceil(a/b), exact for any sign of a; requires b > 0.
inline Int ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

/// gcd of all entries; 0 for an empty vector.
inline Int vec_gcd(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    return g;
}

inline int cmp(const Int& a, const Int& b) {
    return mpz_cmp(a.get_mpz_t(), b.get_mpz_t());
}

/// Componentwise a <= b. Vectors must have equal length.
inline bool vec_leq(const IntVec& a, const IntVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (cmp(a[i], b[i]) > 0) return false;
    return true;
}

inline bool vec_lex_less(const IntVec& a, const IntVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

inline std::string vec_to_string(const IntVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    s += ")";
    return s;
}

inline IntVec vec_of(std::initializer_list<long> xs) {
    IntVec v;
    v.reserve(xs.size());
    for (long x : xs) v.emplace_back(x);
    return v;
}

} // namespace arith
