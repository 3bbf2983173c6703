#pragma once

// Independent oracles used to freeze expected values. These deliberately
// avoid the implementation paths they check: determinants by cofactor
// expansion, membership by the exhaustive-minor classifier, frontiers by
// box scans with domination filtering.

#include <random>
#include <vector>

#include <arith/classify.hpp>
#include <arith/frontier.hpp>
#include <arith/matrix.hpp>
#include <arith/poly.hpp>

namespace oracles {

using arith::Int;
using arith::IntMatrix;
using arith::IntVec;

inline Int cofactor_det(const IntMatrix& m) {
    const int n = m.size();
    if (n == 1) return m.at(0, 0);
    Int acc = 0;
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        IntMatrix sub(n - 1);
        for (int r = 1; r < n; ++r)
            for (int c = 0, sc = 0; c < n; ++c) {
                if (c == j) continue;
                sub.at(r - 1, sc++) = m.at(r, c);
            }
        Int term = m.at(0, j) * cofactor_det(sub);
        if (j % 2) acc -= term;
        else acc += term;
    }
    return acc;
}

inline Int naive_eval(const arith::SqFreePoly& f, const IntVec& d) {
    Int acc = 0;
    for (const auto& [mask, c] : f.terms()) {
        Int p = c;
        for (int i = 0; i < f.nvars(); ++i)
            if (mask & (arith::Mask(1) << i)) p *= d[static_cast<std::size_t>(i)];
        acc += p;
    }
    return acc;
}

/// D>=0 membership for a matrix, decided by the exhaustive-minor classifier.
inline bool in_dgeq0(const IntMatrix& L, const IntVec& d) {
    return arith::classify_z(L.diag_minus(d)).proper_pos_det_nonneg;
}

/// D>=0 membership for a polynomial, decided directly from the shift.
inline bool in_dgeq0(const arith::SqFreePoly& f, const IntVec& d) {
    const arith::SqFreePoly fd = arith::shift(f, d);
    for (const auto& [mask, c] : fd.terms())
        if (mask != 0 && c <= 0) return false;
    return fd.coef(0) >= 0;
}

/// Frontier by brute force: scan the box, keep members, filter dominated.
template <typename Target>
arith::Frontier box_frontier(const Target& t, const IntVec& box) {
    arith::Frontier out(static_cast<int>(box.size()));
    IntVec d(box.size(), Int(1));
    for (;;) {
        if (in_dgeq0(t, d)) out.insert_min(d);
        std::size_t k = box.size();
        bool done = true;
        while (k-- > 0) {
            if (d[k] < box[k]) {
                ++d[k];
                for (std::size_t j = k + 1; j < box.size(); ++j) d[j] = 1;
                done = false;
                break;
            }
        }
        if (done) break;
    }
    return out;
}

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    long pick(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(gen);
    }
    IntMatrix matrix(int n, long lo, long hi) {
        IntMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = pick(lo, hi);
        return m;
    }
    /// Non-negative with zero diagonal.
    IntMatrix nonneg_zero_diag(int n, long hi) {
        IntMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) m.at(i, j) = pick(0, hi);
        return m;
    }
};

} // namespace oracles
