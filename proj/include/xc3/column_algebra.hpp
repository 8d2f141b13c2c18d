#pragma once

/*
 * Column and triple arithmetic shared by everything else in the library.
 *
 * Codewords are binary columns of length m.  A constant-weight-3 column is
 * identified with the 3-set of row indices where it is 1 (a Triple).  The
 * two sums that matter:
 *   superimposed sum  = bitwise OR   (what a set of columns covers)
 *   GF(2) sum         = bitwise XOR  (what a set of columns adds to)
 * "a contained in b" means support(a) is a subset of support(b), i.e.
 * (a OR b) == b.
 */

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace xc3 {

using Point = std::uint32_t;

// Sorted ascending; all usage assumes sortedness.
using PointSet = std::vector<Point>;

// A 3-subset of points, kept sorted.  Value type; ordering is lexicographic
// on the sorted points, which is the ordering every enumeration in this
// library relies on.
class Triple {
public:
    Triple(Point a, Point b, Point c) : pts_{a, b, c} {
        std::sort(pts_.begin(), pts_.end());
        if (pts_[0] == pts_[1] || pts_[1] == pts_[2])
            throw std::invalid_argument("Triple: points must be distinct");
    }

    Point operator[](int i) const { return pts_[static_cast<std::size_t>(i)]; }
    const std::array<Point, 3>& points() const { return pts_; }
    Point max_point() const { return pts_[2]; }
    bool contains_point(Point p) const {
        return p == pts_[0] || p == pts_[1] || p == pts_[2];
    }

    auto operator<=>(const Triple&) const = default;

private:
    std::array<Point, 3> pts_;
};

// Dense bit vector of fixed length m.  Operands of the binary ops must have
// equal length; mismatch is a caller bug and throws.
class BitColumn {
public:
    BitColumn() = default;
    explicit BitColumn(std::uint32_t m)
        : size_(m), words_((m + 63) / 64, 0) {}

    std::uint32_t size() const { return size_; }

    void set(Point i) {
        check_index(i);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    void reset(Point i) {
        check_index(i);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
    bool test(Point i) const {
        check_index(i);
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    int weight() const;
    bool any() const;
    PointSet support() const;

    // |this AND NOT other| and the corresponding points; the witness scan
    // uses these to track how far a partial GF(2) sum sticks out of a
    // pair's cover.
    int andnot_weight(const BitColumn& other) const;
    void andnot_support(const BitColumn& other, std::vector<Point>& out) const;

    bool operator==(const BitColumn&) const = default;

    // In-place variants used by hot loops to avoid churn.
    void or_assign(const BitColumn& other);
    void xor_assign(const BitColumn& other);
    void clear();

    friend BitColumn superimposed_sum(const BitColumn& a, const BitColumn& b);
    friend BitColumn gf2_add(const BitColumn& a, const BitColumn& b);
    friend bool contains(const BitColumn& inner, const BitColumn& outer);

private:
    void check_index(Point i) const {
        if (i >= size_) throw std::invalid_argument("BitColumn: index out of range");
    }
    void check_match(const BitColumn& other) const {
        if (size_ != other.size_)
            throw std::invalid_argument("BitColumn: length mismatch");
    }

    std::uint32_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

// OR of the two columns.
BitColumn superimposed_sum(const BitColumn& a, const BitColumn& b);

// XOR of the two columns.
BitColumn gf2_add(const BitColumn& a, const BitColumn& b);

// True iff support(inner) is a subset of support(outer),
// i.e. superimposed_sum(inner, outer) == outer.
bool contains(const BitColumn& inner, const BitColumn& outer);

// Points covered an odd number of times by the given triples: exactly the
// support of the GF(2) sum of their columns.
PointSet odd_point_union(std::span<const Triple> triples);

// Weight-3 column with ones at the triple's points.  Throws if the triple
// does not fit in m rows.
BitColumn triple_to_column(const Triple& t, std::uint32_t m);

// C(n,3) without overflow for any n this library can touch.
std::uint64_t binom3(std::uint64_t n);

// Lexicographic rank of t among all triples on {0..m-1}.  Inverse of
// enumeration order; every module uses this as the triple id.
std::uint32_t triple_rank(std::uint32_t m, const Triple& t);

// All C(m,3) triples on {0..m-1} in lexicographic order, materialized.
// Only meant for small m (catalog, oracle, derandomized builder); the
// random builder iterates lazily instead.
class TripleUniverse {
public:
    explicit TripleUniverse(std::uint32_t m);

    std::uint32_t m() const { return m_; }
    std::uint32_t size() const { return static_cast<std::uint32_t>(triples_.size()); }
    const Triple& triple(std::uint32_t id) const { return triples_[id]; }
    std::uint32_t rank(const Triple& t) const { return triple_rank(m_, t); }
    const std::vector<Triple>& all() const { return triples_; }

private:
    std::uint32_t m_;
    std::vector<Triple> triples_;
};

} // namespace xc3
