#include "search_core.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <thread>

#include "arith/errors.hpp"

namespace arith::detail {

void SearchContext::check_deadline() const {
    if (opts && opts->deadline && std::chrono::steady_clock::now() > *opts->deadline)
        throw TimeCapExceeded("time cap exceeded during enumeration");
}

std::vector<IntVec> antichain_min(std::vector<IntVec> vs, int dim) {
    std::sort(vs.begin(), vs.end(), vec_lex_less);
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    Frontier f(dim);
    // lexicographic order: later vectors never dominate accepted ones
    for (IntVec& v : vs) f.insert_min(v);
    return f.elems();
}

std::vector<IntVec> min_max_combinations(const std::vector<std::vector<IntVec>>& sets, int dim) {
    std::vector<IntVec> acc{IntVec(static_cast<std::size_t>(dim), Int(0))};
    for (const std::vector<IntVec>& choices : sets) {
        std::vector<IntVec> next;
        next.reserve(acc.size() * choices.size());
        for (const IntVec& p : acc)
            for (const IntVec& a : choices) {
                IntVec m(p);
                for (std::size_t i = 0; i < m.size(); ++i)
                    if (cmp(a[i], m[i]) > 0) m[i] = a[i];
                next.push_back(std::move(m));
            }
        acc = antichain_min(std::move(next), dim);
    }
    return acc;
}

namespace {

bool dominated_by_any(const std::vector<IntVec>& antichain, const IntVec& v) {
    for (const IntVec& u : antichain)
        if (vec_leq(u, v)) return true;
    return false;
}

} // namespace

std::vector<IntVec> find_quasi_points(const SqFreePoly& f, const IntVec& start,
                                      const SearchContext& ctx, EnumStats& stats) {
    const int n = f.nvars();
    std::vector<IntVec> out;
    std::set<IntVec> visited;
    std::vector<IntVec> level{start};
    visited.insert(start);
    while (!level.empty()) {
        std::vector<IntVec> next;
        for (const IntVec& d : level) {
            ctx.check_deadline();
            ++stats.find_nodes;
            if (dominated_by_any(out, d)) continue;
            const ShiftedLinearForm slf = shifted_linear_form(f, d);
            std::vector<int> zero_set;
            for (int s = 0; s < n; ++s) {
                const int c = cmp(slf.lin[static_cast<std::size_t>(s)], Int(0));
                if (c < 0)
                    throw std::logic_error("negative linear coefficient during Find; "
                                           "start point invariant violated");
                if (c == 0) zero_set.push_back(s);
            }
            if (zero_set.empty()) {
                out.push_back(d);
                continue;
            }
            for (int t = 0; t < n; ++t) {
                // raising the lone blocked coordinate never unblocks it
                if (zero_set.size() == 1 && zero_set.front() == t) continue;
                IntVec d2(d);
                d2[static_cast<std::size_t>(t)] += 1;
                if (visited.insert(d2).second) next.push_back(std::move(d2));
            }
        }
        std::sort(next.begin(), next.end(), vec_lex_less);
        level = std::move(next);
    }
    return out;
}

std::vector<IntVec> min_nonneg_completions(const SqFreePoly& h,
                                           const SearchContext& ctx, EnumStats& stats) {
    const int n = h.nvars();
    for (const auto& [m, c] : h.terms())
        if (m != 0 && c <= 0)
            throw std::logic_error("completion search requires positive non-constant coefficients");
    const IntVec zero(static_cast<std::size_t>(n), Int(0));
    if (h.coef(0) >= 0) return {zero};

    std::vector<IntVec> out;
    std::set<IntVec> visited{zero};
    std::vector<IntVec> level{zero};
    std::size_t since_check = 0;
    while (!level.empty()) {
        std::vector<IntVec> next;
        for (const IntVec& e : level) {
            ++stats.completion_nodes;
            if (++since_check >= 1024) {
                since_check = 0;
                ctx.check_deadline();
            }
            if (dominated_by_any(out, e)) continue;
            if (eval(h, e) >= 0) {
                out.push_back(e);
                continue;
            }
            for (int t = 0; t < n; ++t) {
                IntVec e2(e);
                e2[static_cast<std::size_t>(t)] += 1;
                if (visited.insert(e2).second) next.push_back(std::move(e2));
            }
        }
        std::sort(next.begin(), next.end(), vec_lex_less);
        level = std::move(next);
    }
    return out;
}

namespace {

void verify_start_invariants(const SqFreePoly& f, const IntVec& start) {
    const SqFreePoly shifted = shift(f, start);
    for (const auto& [m, c] : shifted.terms()) {
        if (m == 0) continue;
        if (std::popcount(m) >= 2 && c <= 0)
            throw std::logic_error("start point has a non-positive coefficient of degree >= 2");
    }
    for (int s = 0; s < f.nvars(); ++s)
        if (shifted.coef(Mask(1) << s) < 0)
            throw std::logic_error("start point has a negative linear coefficient");
}

void process_start(const SqFreePoly& f, const IntVec& start, Frontier& out,
                   const SearchContext& ctx, EnumStats& stats) {
    verify_start_invariants(f, start);
    for (const IntVec& q : find_quasi_points(f, start, ctx, stats)) {
        if (out.dominates_some(q)) continue;
        const SqFreePoly h = shift(f, q);
        for (const IntVec& e : min_nonneg_completions(h, ctx, stats)) {
            IntVec v(q);
            for (std::size_t i = 0; i < v.size(); ++i) v[i] += e[i];
            out.insert_min(v);
        }
    }
}

} // namespace

Frontier frontier_from_starts(const SqFreePoly& f, std::vector<IntVec> starts,
                              const EnumOptions& opts, EnumStats& stats) {
    const int n = f.nvars();
    starts = antichain_min(std::move(starts), n);
    stats.start_points += starts.size();
    SearchContext ctx{&opts};

    const int threads = std::max(1, opts.threads);
    if (threads == 1 || starts.size() < 2) {
        Frontier out(n);
        for (const IntVec& start : starts) {
            if (out.dominates_some(start)) continue; // everything above is dominated too
            process_start(f, start, out, ctx, stats);
        }
        return out;
    }

    // Independent start-point searches; local frontiers merged at the end.
    // The merge algebra makes the result schedule-independent.
    const std::size_t nworkers = std::min<std::size_t>(static_cast<std::size_t>(threads), starts.size());
    std::vector<Frontier> local(nworkers, Frontier(n));
    std::vector<EnumStats> local_stats(nworkers);
    std::vector<std::exception_ptr> errors(nworkers);
    std::vector<std::thread> pool;
    pool.reserve(nworkers);
    for (std::size_t w = 0; w < nworkers; ++w) {
        pool.emplace_back([&, w]() {
            try {
                for (std::size_t i = w; i < starts.size(); i += nworkers) {
                    if (local[w].dominates_some(starts[i])) continue;
                    process_start(f, starts[i], local[w], ctx, local_stats[w]);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (std::thread& t : pool) t.join();
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);
    Frontier out(n);
    for (std::size_t w = 0; w < nworkers; ++w) {
        out = Frontier::merge(out, local[w]);
        stats.find_nodes += local_stats[w].find_nodes;
        stats.completion_nodes += local_stats[w].completion_nodes;
    }
    return out;
}

} // namespace arith::detail
