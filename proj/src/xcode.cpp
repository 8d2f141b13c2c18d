#include "xc3/xcode.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace xc3 {

XCode xcode_from_triples(std::uint32_t m, int d, int x,
                         const std::vector<Triple>& blocks) {
    XCode code;
    code.m = m;
    code.d = d;
    code.x = x;
    code.columns.reserve(blocks.size());
    for (const auto& t : blocks) code.columns.push_back(triple_to_column(t, m));
    return code;
}

std::optional<std::vector<Triple>> xcode_triples(const XCode& code) {
    std::vector<Triple> out;
    out.reserve(code.n());
    for (const auto& col : code.columns) {
        if (col.weight() != 3) return std::nullopt;
        auto s = col.support();
        out.emplace_back(s[0], s[1], s[2]);
    }
    return out;
}

namespace {

// Calls fn(indices) for every k-subset of {0..n-1} in lexicographic order
// until fn returns true; returns whether fn ever did.
bool for_each_subset(int n, int k, const std::function<bool(const std::vector<int>&)>& fn) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    if (k == 0) return fn(idx);
    if (k > n) return false;
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        if (fn(idx)) return true;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

} // namespace

std::optional<ViolationWitness> find_violation(const XCode& code, int d, int x) {
    if (d < 0 || x < 0) throw std::invalid_argument("find_violation: d, x must be >= 0");
    const int n = static_cast<int>(code.n());
    if (n <= x) return std::nullopt; // nothing to pick an "other" column from

    std::optional<ViolationWitness> found;
    for_each_subset(n, x, [&](const std::vector<int>& xpart) {
        BitColumn cover(code.m);
        for (int j : xpart) cover.or_assign(code.columns[static_cast<std::size_t>(j)]);

        std::vector<int> rest;
        rest.reserve(static_cast<std::size_t>(n - x));
        for (int j = 0, k = 0; j < n; ++j) {
            if (k < x && xpart[static_cast<std::size_t>(k)] == j) { ++k; continue; }
            rest.push_back(j);
        }

        const int smax = std::min(d, static_cast<int>(rest.size()));
        for (int s = 1; s <= smax; ++s) {
            bool hit = for_each_subset(static_cast<int>(rest.size()), s,
                                       [&](const std::vector<int>& pick) {
                BitColumn sum(code.m);
                for (int r : pick) sum.xor_assign(code.columns[static_cast<std::size_t>(rest[static_cast<std::size_t>(r)])]);
                if (!contains(sum, cover)) return false;
                ViolationWitness w;
                w.x_part = xpart;
                for (int r : pick) w.s_part.push_back(rest[static_cast<std::size_t>(r)]);
                found = std::move(w);
                return true;
            });
            if (hit) return true;
        }
        return false;
    });
    return found;
}

bool is_xcode(const XCode& code, int d, int x) {
    return !find_violation(code, d, x).has_value();
}

bool check_constant_weight(const XCode& code, int w) {
    for (const auto& col : code.columns)
        if (col.weight() != w) return false;
    return true;
}

bool witness_holds(const XCode& code, const ViolationWitness& w) {
    BitColumn cover(code.m);
    for (int j : w.x_part) {
        if (j < 0 || static_cast<std::size_t>(j) >= code.n()) return false;
        cover.or_assign(code.columns[static_cast<std::size_t>(j)]);
    }
    if (w.s_part.empty()) return false;
    BitColumn sum(code.m);
    for (int j : w.s_part) {
        if (j < 0 || static_cast<std::size_t>(j) >= code.n()) return false;
        if (std::find(w.x_part.begin(), w.x_part.end(), j) != w.x_part.end()) return false;
        sum.xor_assign(code.columns[static_cast<std::size_t>(j)]);
    }
    return contains(sum, cover);
}

} // namespace xc3
