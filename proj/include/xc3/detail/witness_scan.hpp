#pragma once

/*
 * Generic scan for forbidden configurations, shared by the full catalog
 * (universe = all triples on m points) and by repair/self-check passes
 * (universe = a sampled block family on arbitrary m).
 *
 * A witness is a pair of triples {A1, A2} plus a tail S of 1..d further
 * triples, none equal to A1 or A2, whose odd point union lies inside
 * A1 OR A2.  The scan loops over pairs and grows tails id-ascending,
 * tracking the running GF(2) point parity X of the tail:
 *
 *   - mid levels prune on |X \ P| <= 3 * remaining, since each further
 *     triple can flip at most 3 points outside the pair cover P;
 *   - the last tail member is constructed directly: it must contain
 *     exactly the points of X outside P, padded with points of P.
 *
 * Tail triples may use points outside P as long as they cancel in parity.
 * The same configuration set can be reachable from several pairs; it is
 * emitted only from its canonical (lexicographically first valid) pair,
 * so each set appears exactly once, with that pair attached.
 */

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "xc3/column_algebra.hpp"

namespace xc3::detail {

// ---- mask flavors ---------------------------------------------------------

struct U64MaskOps {
    using Mask = std::uint64_t;
    Mask zero() const { return 0; }
    static void assign(Mask& dst, Mask src) { dst = src; }
    static void xor_assign(Mask& a, Mask b) { a ^= b; }
    static Mask or_of(Mask a, Mask b) { return a | b; }
    static int outside_count(Mask x, Mask p) { return std::popcount(x & ~p); }
    static bool is_inside(Mask x, Mask p) { return (x & ~p) == 0; }
    static void outside_points(Mask x, Mask p, std::vector<Point>& out) {
        std::uint64_t rest = x & ~p;
        while (rest) {
            out.push_back(static_cast<Point>(std::countr_zero(rest)));
            rest &= rest - 1;
        }
    }
    static void points(Mask x, std::vector<Point>& out) {
        while (x) {
            out.push_back(static_cast<Point>(std::countr_zero(x)));
            x &= x - 1;
        }
    }
};

struct ColumnMaskOps {
    using Mask = BitColumn;
    std::uint32_t width;
    Mask zero() const { return BitColumn(width); }
    static void assign(Mask& dst, const Mask& src) { dst = src; }
    static void xor_assign(Mask& a, const Mask& b) { a.xor_assign(b); }
    static Mask or_of(const Mask& a, const Mask& b) { return superimposed_sum(a, b); }
    static int outside_count(const Mask& x, const Mask& p) { return x.andnot_weight(p); }
    static bool is_inside(const Mask& x, const Mask& p) { return x.andnot_weight(p) == 0; }
    static void outside_points(const Mask& x, const Mask& p, std::vector<Point>& out) {
        x.andnot_support(p, out);
    }
    static void points(const Mask& x, std::vector<Point>& out) {
        for (Point q : x.support()) out.push_back(q);
    }
};

// ---- universes -------------------------------------------------------------

// Every triple on {0..m-1}; requires m <= 64 so masks fit a word.  Lookup is
// the rank formula, so candidate completion triples always resolve.
class AllTriplesUniverse {
public:
    using Ops = U64MaskOps;
    using Mask = std::uint64_t;

    explicit AllTriplesUniverse(const TripleUniverse& uni) : uni_(uni) {
        masks_.reserve(uni.size());
        for (std::uint32_t i = 0; i < uni.size(); ++i) {
            Mask mk = 0;
            for (Point p : uni.triple(i).points()) mk |= Mask{1} << p;
            masks_.push_back(mk);
        }
    }

    std::uint32_t size() const { return uni_.size(); }
    Mask mask(std::uint32_t id) const { return masks_[id]; }
    std::optional<std::uint32_t> lookup(Point a, Point b, Point c) const {
        return triple_rank(uni_.m(), Triple(a, b, c));
    }
    Ops ops() const { return {}; }

private:
    const TripleUniverse& uni_;
    std::vector<Mask> masks_;
};

// A fixed family of distinct triples, sorted ascending; ids are positions.
// Masks are full columns, so any point magnitude works.
class FamilyUniverse {
public:
    using Ops = ColumnMaskOps;
    using Mask = BitColumn;

    FamilyUniverse(std::vector<Triple> sorted_blocks, std::uint32_t width)
        : blocks_(std::move(sorted_blocks)), width_(width) {
        masks_.reserve(blocks_.size());
        for (const auto& t : blocks_) masks_.push_back(triple_to_column(t, width_));
    }

    std::uint32_t size() const { return static_cast<std::uint32_t>(blocks_.size()); }
    const Mask& mask(std::uint32_t id) const { return masks_[id]; }
    const Triple& triple(std::uint32_t id) const { return blocks_[id]; }
    std::optional<std::uint32_t> lookup(Point a, Point b, Point c) const {
        Triple t(a, b, c);
        auto it = std::lower_bound(blocks_.begin(), blocks_.end(), t);
        if (it == blocks_.end() || !(*it == t)) return std::nullopt;
        return static_cast<std::uint32_t>(it - blocks_.begin());
    }
    Ops ops() const { return {width_}; }

private:
    std::vector<Triple> blocks_;
    std::uint32_t width_;
    std::vector<Mask> masks_;
};

// ---- the scan ---------------------------------------------------------------

// Emit receives (sorted config ids, pair id lo, pair id hi).
template <class Uni, class Emit>
class WitnessScanner {
public:
    WitnessScanner(const Uni& uni, int d, Emit& emit)
        : uni_(uni), ops_(uni.ops()), d_(d), emit_(emit) {
        xs_.assign(static_cast<std::size_t>(d_) + 1, ops_.zero());
        scratch_ = ops_.zero();
        scratch2_ = ops_.zero();
    }

    void run() {
        const std::uint32_t n = uni_.size();
        if (n < 3 || d_ < 1) return;
        for (i1_ = 0; i1_ + 1 < n; ++i1_) {
            for (i2_ = i1_ + 1; i2_ < n; ++i2_) {
                pmask_ = Ops::or_of(uni_.mask(i1_), uni_.mask(i2_));
                ppts_.clear();
                Ops::points(pmask_, ppts_);
                for (int j = 1; j <= d_; ++j) {
                    chosen_.clear();
                    grow(0, j);
                }
            }
        }
    }

private:
    using Ops = typename Uni::Ops;
    using Mask = typename Uni::Mask;

    void grow(std::uint32_t start, int remaining) {
        const Mask& x = xs_[chosen_.size()];
        if (remaining == 1) {
            complete(start, x);
            return;
        }
        for (std::uint32_t id = start; id < uni_.size(); ++id) {
            if (id == i1_ || id == i2_) continue;
            Mask& nx = xs_[chosen_.size() + 1];
            Ops::assign(nx, x);
            Ops::xor_assign(nx, uni_.mask(id));
            if (Ops::outside_count(nx, pmask_) > 3 * (remaining - 1)) continue;
            chosen_.push_back(id);
            grow(id + 1, remaining - 1);
            chosen_.pop_back();
        }
    }

    // The last tail member must carry exactly the parity sticking out of the
    // pair cover; pad the rest from the cover's points.
    void complete(std::uint32_t start, const Mask& x) {
        opts_.clear();
        Ops::outside_points(x, pmask_, opts_);
        const int k = static_cast<int>(opts_.size());
        if (k > 3) return;
        const int need = 3 - k;
        const int pp = static_cast<int>(ppts_.size());
        if (need > pp) return;

        std::array<int, 3> sel{};
        for (int i = 0; i < need; ++i) sel[static_cast<std::size_t>(i)] = i;
        while (true) {
            Point a, b, c;
            pick(sel, need, a, b, c);
            if (auto id = uni_.lookup(a, b, c);
                id && *id >= start && *id != i1_ && *id != i2_) {
                accept(*id);
            }
            if (need == 0) break;
            int i = need - 1;
            while (i >= 0 && sel[static_cast<std::size_t>(i)] == pp - need + i) --i;
            if (i < 0) break;
            ++sel[static_cast<std::size_t>(i)];
            for (int j2 = i + 1; j2 < need; ++j2)
                sel[static_cast<std::size_t>(j2)] = sel[static_cast<std::size_t>(j2 - 1)] + 1;
        }
    }

    void pick(const std::array<int, 3>& sel, int need, Point& a, Point& b, Point& c) const {
        std::array<Point, 3> pts{};
        std::size_t w = 0;
        for (Point q : opts_) pts[w++] = q;
        for (int i = 0; i < need; ++i) pts[w++] = ppts_[static_cast<std::size_t>(sel[static_cast<std::size_t>(i)])];
        std::sort(pts.begin(), pts.begin() + 3);
        a = pts[0]; b = pts[1]; c = pts[2];
    }

    void accept(std::uint32_t finalId) {
        ids_.clear();
        ids_.reserve(chosen_.size() + 3);
        for (std::uint32_t id : chosen_) ids_.push_back(id);
        ids_.push_back(finalId);
        insert_sorted(i1_);
        insert_sorted(i2_);
        if (canonical_pair_is(i1_, i2_, finalId)) emit_(ids_, i1_, i2_);
    }

    void insert_sorted(std::uint32_t v) {
        ids_.insert(std::upper_bound(ids_.begin(), ids_.end(), v), v);
    }

    // Total parity of the config = tail parity ^ pair masks; a pair position
    // is valid iff the remaining members' parity sits inside its cover.
    bool canonical_pair_is(std::uint32_t a, std::uint32_t b, std::uint32_t finalId) {
        Ops::assign(scratch_, xs_[chosen_.size()]);
        Ops::xor_assign(scratch_, uni_.mask(finalId));
        Ops::xor_assign(scratch_, uni_.mask(a));
        Ops::xor_assign(scratch_, uni_.mask(b)); // scratch_ = parity of whole config
        const std::size_t s = ids_.size();
        for (std::size_t u = 0; u < s; ++u) {
            for (std::size_t v = u + 1; v < s; ++v) {
                Ops::assign(scratch2_, scratch_);
                Ops::xor_assign(scratch2_, uni_.mask(ids_[u]));
                Ops::xor_assign(scratch2_, uni_.mask(ids_[v]));
                if (Ops::is_inside(scratch2_, Ops::or_of(uni_.mask(ids_[u]), uni_.mask(ids_[v]))))
                    return (ids_[u] == a && ids_[v] == b) || (ids_[u] == b && ids_[v] == a);
            }
        }
        return false; // unreachable: (a, b) itself is valid
    }

    const Uni& uni_;
    Ops ops_;
    int d_;
    Emit& emit_;

    std::uint32_t i1_ = 0, i2_ = 0;
    Mask pmask_{};
    std::vector<Point> ppts_, opts_;
    std::vector<std::uint32_t> chosen_, ids_;
    std::vector<Mask> xs_;
    Mask scratch_{}, scratch2_{};
};

template <class Uni, class Emit>
void scan_witnesses(const Uni& uni, int d, Emit emit) {
    WitnessScanner<Uni, Emit> scanner(uni, d, emit);
    scanner.run();
}

} // namespace xc3::detail
