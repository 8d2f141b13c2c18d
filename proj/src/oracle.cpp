#include "xc3/oracle.hpp"

#include <algorithm>
#include <iostream>

#include "xc3/catalog.hpp"

namespace xc3 {

namespace {

// Enumerates k-subsets of {0..n-1} in lexicographic order; fn returning
// true aborts the walk and propagates true.
template <class Fn>
bool each_subset(int n, int k, Fn&& fn) {
    if (k > n || k < 0) return false;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        if (fn(static_cast<const std::vector<int>&>(idx))) return true;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

// DFS over lexicographically increasing block sequences; every prefix is a
// valid code, so feasibility only needs to look at violations that would
// involve the candidate block.
struct Search {
    const TripleUniverse& uni;
    std::vector<std::uint64_t> masks;
    int d, x;
    std::uint32_t best_n = 0;
    std::vector<std::uint32_t> best, cur;
    std::uint64_t checks = 0;

    Search(const TripleUniverse& u, int d_, int x_) : uni(u), d(d_), x(x_) {
        masks.reserve(u.size());
        for (std::uint32_t i = 0; i < u.size(); ++i) {
            std::uint64_t mk = 0;
            for (Point p : u.triple(i).points()) mk |= std::uint64_t{1} << p;
            masks.push_back(mk);
        }
    }

    static bool inside(std::uint64_t inner, std::uint64_t cover) {
        return (inner & ~cover) == 0;
    }

    // Some XOR of 1..budget blocks taken from rest[from..], on top of acc,
    // landing inside cover?  acc itself is checked by the caller.
    bool xor_hits(const std::vector<int>& rest, std::size_t from, std::uint64_t acc,
                  int budget, std::uint64_t cover) const {
        if (budget == 0) return false;
        for (std::size_t i = from; i < rest.size(); ++i) {
            const std::uint64_t nxt = acc ^ masks[cur[static_cast<std::size_t>(rest[i])]];
            if (inside(nxt, cover)) return true;
            if (xor_hits(rest, i + 1, nxt, budget - 1, cover)) return true;
        }
        return false;
    }

    std::vector<int> complement(const std::vector<int>& taken) const {
        std::vector<int> rest;
        rest.reserve(cur.size() - taken.size());
        for (int j = 0; j < static_cast<int>(cur.size()); ++j)
            if (std::find(taken.begin(), taken.end(), j) == taken.end()) rest.push_back(j);
        return rest;
    }

    bool extendable(std::uint32_t cand) {
        ++checks;
        const int n = static_cast<int>(cur.size());
        const std::uint64_t cmask = masks[cand];

        // candidate inside the OR part: x_part = {cand} + (x-1) old blocks
        if (x >= 1) {
            bool viol = each_subset(n, x - 1, [&](const std::vector<int>& xi) {
                std::uint64_t cover = cmask;
                for (int j : xi) cover |= masks[cur[static_cast<std::size_t>(j)]];
                return xor_hits(complement(xi), 0, 0, d, cover);
            });
            if (viol) return false;
        }
        // candidate inside the GF(2) part: x_part = x old blocks,
        // s_part = {cand} + up to d-1 old blocks
        {
            bool viol = each_subset(n, x, [&](const std::vector<int>& xi) {
                std::uint64_t cover = 0;
                for (int j : xi) cover |= masks[cur[static_cast<std::size_t>(j)]];
                if (inside(cmask, cover)) return true;
                return xor_hits(complement(xi), 0, cmask, d - 1, cover);
            });
            if (viol) return false;
        }
        return true;
    }

    void dfs(std::uint32_t next_id) {
        if (cur.size() > best_n) {
            best_n = static_cast<std::uint32_t>(cur.size());
            best = cur;
        }
        for (std::uint32_t id = next_id; id < uni.size(); ++id) {
            if (cur.size() + (uni.size() - id) <= best_n) break;
            if (!extendable(id)) continue;
            cur.push_back(id);
            dfs(id + 1);
            cur.pop_back();
        }
    }
};

} // namespace

OracleResult max_code_exhaustive(std::uint32_t m, int d, int x,
                                 const OracleLimits& limits) {
    if (m < 3) throw std::invalid_argument("max_code_exhaustive: m >= 3 required");
    if (d < 1 || x < 0)
        throw std::invalid_argument("max_code_exhaustive: d >= 1, x >= 0 required");
    if (m > limits.max_m) {
        if (!limits.override_guard)
            throw ResourceLimitError(
                "exhaustive search is guarded to m <= " + std::to_string(limits.max_m) +
                "; set the override to force it");
        std::cerr << "[oracle] warning: m=" << m
                  << " exceeds the guard; this search may take a very long time\n";
    }
    if (m > 64)
        throw ResourceLimitError("exhaustive search supports at most 64 points");

    TripleUniverse uni(m);
    Search search(uni, d, x);

    // Any nonempty code can be relabeled so its lexicographically first
    // block becomes {0,1,2}; a single block is always a code.
    search.cur.push_back(0);
    search.dfs(1);

    OracleResult res;
    res.m = m;
    res.d = d;
    res.x = x;
    res.max_n = search.best_n;
    res.extension_checks = search.checks;
    res.example_code.reserve(search.best.size());
    for (std::uint32_t id : search.best) res.example_code.push_back(uni.triple(id));
    return res;
}

std::vector<std::vector<Triple>> forbidden_sets_bruteforce(std::uint32_t m, int d) {
    if (m < 3) throw std::invalid_argument("forbidden_sets_bruteforce: m >= 3 required");
    if (d < 1) throw std::invalid_argument("forbidden_sets_bruteforce: d >= 1 required");
    if (m > 7 || d > 3)
        throw ResourceLimitError("forbidden_sets_bruteforce is guarded to m <= 7, d <= 3");

    TripleUniverse uni(m);
    const int n = static_cast<int>(uni.size());
    std::vector<std::vector<Triple>> out;

    const int smax = std::min(d + 2, n);
    for (int s = 3; s <= smax; ++s) {
        std::vector<Triple> config;
        each_subset(n, s, [&](const std::vector<int>& idx) {
            config.clear();
            for (int i : idx) config.push_back(uni.triple(static_cast<std::uint32_t>(i)));
            if (is_forbidden_config(config, d)) out.push_back(config);
            return false;
        });
    }
    return out;
}

} // namespace xc3
