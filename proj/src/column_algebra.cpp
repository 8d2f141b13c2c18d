#include "xc3/column_algebra.hpp"

#include <bit>

namespace xc3 {

int BitColumn::weight() const {
    int w = 0;
    for (auto word : words_) w += std::popcount(word);
    return w;
}

bool BitColumn::any() const {
    for (auto word : words_)
        if (word) return true;
    return false;
}

PointSet BitColumn::support() const {
    PointSet out;
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
        std::uint64_t word = words_[wi];
        while (word) {
            int b = std::countr_zero(word);
            out.push_back(static_cast<Point>(wi * 64 + static_cast<std::size_t>(b)));
            word &= word - 1;
        }
    }
    return out;
}

int BitColumn::andnot_weight(const BitColumn& other) const {
    check_match(other);
    int w = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
        w += std::popcount(words_[i] & ~other.words_[i]);
    return w;
}

void BitColumn::andnot_support(const BitColumn& other, std::vector<Point>& out) const {
    check_match(other);
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
        std::uint64_t word = words_[wi] & ~other.words_[wi];
        while (word) {
            int b = std::countr_zero(word);
            out.push_back(static_cast<Point>(wi * 64 + static_cast<std::size_t>(b)));
            word &= word - 1;
        }
    }
}

void BitColumn::or_assign(const BitColumn& other) {
    check_match(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
}

void BitColumn::xor_assign(const BitColumn& other) {
    check_match(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
}

void BitColumn::clear() {
    std::fill(words_.begin(), words_.end(), 0);
}

BitColumn superimposed_sum(const BitColumn& a, const BitColumn& b) {
    a.check_match(b);
    BitColumn out = a;
    out.or_assign(b);
    return out;
}

BitColumn gf2_add(const BitColumn& a, const BitColumn& b) {
    a.check_match(b);
    BitColumn out = a;
    out.xor_assign(b);
    return out;
}

bool contains(const BitColumn& inner, const BitColumn& outer) {
    inner.check_match(outer);
    for (std::size_t i = 0; i < inner.words_.size(); ++i)
        if (inner.words_[i] & ~outer.words_[i]) return false;
    return true;
}

PointSet odd_point_union(std::span<const Triple> triples) {
    // Small inputs throughout the library; a sort-and-count pass beats
    // building columns and keeps this independent of any ambient m.
    std::vector<Point> pts;
    pts.reserve(triples.size() * 3);
    for (const auto& t : triples)
        for (Point p : t.points()) pts.push_back(p);
    std::sort(pts.begin(), pts.end());

    PointSet out;
    std::size_t i = 0;
    while (i < pts.size()) {
        std::size_t j = i;
        while (j < pts.size() && pts[j] == pts[i]) ++j;
        if ((j - i) % 2 == 1) out.push_back(pts[i]);
        i = j;
    }
    return out;
}

BitColumn triple_to_column(const Triple& t, std::uint32_t m) {
    if (t.max_point() >= m)
        throw std::invalid_argument("triple_to_column: point exceeds ambient size");
    BitColumn col(m);
    for (Point p : t.points()) col.set(p);
    return col;
}

std::uint64_t binom3(std::uint64_t n) {
    if (n < 3) return 0;
    // n*(n-1)*(n-2)/6 with the division interleaved to dodge overflow.
    std::uint64_t a = n, b = n - 1, c = n - 2;
    if (a % 3 == 0) a /= 3;
    else if (b % 3 == 0) b /= 3;
    else c /= 3;
    if (a % 2 == 0) a /= 2;
    else if (b % 2 == 0) b /= 2;
    else c /= 2;
    return a * b * c;
}

std::uint32_t triple_rank(std::uint32_t m, const Triple& t) {
    if (t.max_point() >= m)
        throw std::invalid_argument("triple_rank: point exceeds ambient size");
    std::uint64_t a = t[0], b = t[1], c = t[2], mm = m;
    // triples with smaller first point, then smaller second, then third
    std::uint64_t r = binom3(mm) - binom3(mm - a);
    std::uint64_t left = mm - 1 - a; // points above a
    r += left * (left - 1) / 2 - (mm - b) * (mm - b - 1) / 2;
    r += c - b - 1;
    return static_cast<std::uint32_t>(r);
}

TripleUniverse::TripleUniverse(std::uint32_t m) : m_(m) {
    if (m < 3) return;
    triples_.reserve(binom3(m));
    for (Point a = 0; a + 2 < m; ++a)
        for (Point b = a + 1; b + 1 < m; ++b)
            for (Point c = b + 1; c < m; ++c)
                triples_.emplace_back(a, b, c);
}

} // namespace xc3
