#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "xc3/compaction.hpp"
#include "xc3/xcode.hpp"

using namespace xc3;

namespace {

// Weight-2 compactor on 4 outputs, valid at (d, x) = (1, 1): columns are the
// six 2-subsets of the rows in the order {01},{12},{23},{02},{03},{13}.
XCode pair_compactor() {
    const std::vector<std::pair<Point, Point>> cols{
        {0, 1}, {1, 2}, {2, 3}, {0, 2}, {0, 3}, {1, 3}};
    XCode code;
    code.m = 4;
    code.d = 1;
    code.x = 1;
    for (auto [a, b] : cols) {
        BitColumn c(4);
        c.set(a);
        c.set(b);
        code.columns.push_back(std::move(c));
    }
    return code;
}

XCode two_equal_columns() {
    XCode code;
    code.m = 4;
    code.d = 1;
    code.x = 1;
    for (int i = 0; i < 2; ++i) {
        BitColumn c(4);
        c.set(0);
        c.set(1);
        code.columns.push_back(std::move(c));
    }
    return code;
}

// Exhaustive fault-injection sweep: every X placement of size <= x and every
// nonempty definite fault set of size <= d, over the given base responses.
bool sweep_all_detected(const XCode& code, int d, int x,
                        const std::vector<TernaryVector>& bases) {
    const std::size_t n = code.n();
    std::vector<std::size_t> members(n);
    for (std::size_t i = 0; i < n; ++i) members[i] = i;

    std::vector<std::vector<std::size_t>> subsets{{}};
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t sz = subsets.size();
        for (std::size_t s = 0; s < sz; ++s) {
            auto ext = subsets[s];
            ext.push_back(i);
            subsets.push_back(std::move(ext));
        }
    }

    for (const auto& base : bases) {
        for (const auto& xs : subsets) {
            if (xs.size() > static_cast<std::size_t>(x)) continue;
            auto entries = base.entries();
            for (std::size_t i : xs) entries[i] = Trit::x;
            TernaryVector expected{entries};
            for (const auto& fs : subsets) {
                if (fs.empty() || fs.size() > static_cast<std::size_t>(d)) continue;
                bool overlaps = false;
                for (std::size_t f : fs)
                    for (std::size_t i : xs)
                        if (f == i) overlaps = true;
                if (overlaps) continue;
                if (!simulate_detection(code, expected, fs)) return false;
            }
        }
    }
    return true;
}

TernaryVector random_binary_vector(std::size_t n, std::mt19937_64& rng) {
    std::vector<Trit> e(n);
    for (auto& t : e) t = (rng() & 1) ? Trit::one : Trit::zero;
    return TernaryVector{e};
}

} // namespace

TEST_CASE("ternary parsing and printing") {
    auto v = TernaryVector::parse("01xX10");
    CHECK(v.size() == 6);
    CHECK(v[0] == Trit::zero);
    CHECK(v[1] == Trit::one);
    CHECK(v[2] == Trit::x);
    CHECK(v[3] == Trit::x);
    CHECK(v.str() == "01XX10");
    CHECK(TernaryVector::parse(v.str()) == v);
    CHECK(TernaryVector::parse("").size() == 0);
    CHECK_THROWS_AS(TernaryVector::parse("012"), std::invalid_argument);
    CHECK_THROWS_AS(TernaryVector::parse("0 1"), std::invalid_argument);
}

TEST_CASE("compaction on the pair compactor matches hand results") {
    const XCode code = pair_compactor();
    CHECK(compact(code, TernaryVector::parse("011000")).str() == "0101");
    CHECK(compact(code, TernaryVector::parse("X11100")).str() == "XX11");
    CHECK(compact(code, TernaryVector::parse("000000")).str() == "0000");
    CHECK(compact(code, TernaryVector::parse("XXXXXX")).str() == "XXXX");
    // selecting every column hits each row three times: odd parity
    CHECK(compact(code, TernaryVector::parse("111111")).str() == "1111");
    CHECK_THROWS_AS(compact(code, TernaryVector::parse("0110")), std::invalid_argument);
}

TEST_CASE("discrepancy needs two definite, differing symbols") {
    auto u = TernaryVector::parse("0101");
    CHECK(!detect_discrepancy(u, u));
    CHECK(detect_discrepancy(u, TernaryVector::parse("0001")));
    CHECK(!detect_discrepancy(TernaryVector::parse("XX"), TernaryVector::parse("01")));
    CHECK(!detect_discrepancy(TernaryVector::parse("0X"), TernaryVector::parse("X1")));
    CHECK(detect_discrepancy(TernaryVector::parse("0X"), TernaryVector::parse("1X")));
    CHECK_THROWS_AS(detect_discrepancy(u, TernaryVector::parse("01")),
                    std::invalid_argument);
}

TEST_CASE("single faults under one X always surface on the pair compactor") {
    const XCode code = pair_compactor();
    REQUIRE(is_xcode(code, 1, 1));
    std::mt19937_64 rng(4711);
    const std::vector<TernaryVector> bases{
        TernaryVector::parse("000000"),
        random_binary_vector(6, rng),
        random_binary_vector(6, rng),
    };
    CHECK(sweep_all_detected(code, 1, 1, bases));
}

TEST_CASE("an X over one of two equal columns masks a fault on the other") {
    const XCode code = two_equal_columns();
    REQUIRE(!is_xcode(code, 1, 1));
    CHECK(!simulate_detection(code, TernaryVector::parse("X0"), {1}));
    // without the X the same fault is caught
    CHECK(simulate_detection(code, TernaryVector::parse("00"), {1}));
}

TEST_CASE("the detection result ignores how X entries are realized") {
    const XCode code = pair_compactor();
    const auto expected = TernaryVector::parse("X11100");
    const auto target = compact(code, expected);
    for (Trit realized : {Trit::zero, Trit::one}) {
        for (std::size_t fault : {1u, 4u}) {
            auto entries = expected.entries();
            entries[0] = realized;
            entries[fault] = entries[fault] == Trit::one ? Trit::zero : Trit::one;
            const bool detected = detect_discrepancy(compact(code, TernaryVector{entries}), target);
            CHECK(detected == simulate_detection(code, expected, {fault}));
        }
    }
}

TEST_CASE("simulate_detection argument handling") {
    const XCode code = pair_compactor();
    const auto expected = TernaryVector::parse("0110X0");
    CHECK(!simulate_detection(code, expected, {}));     // nothing flipped
    CHECK_THROWS_AS(simulate_detection(code, expected, {4}),
                    std::invalid_argument);             // fault under an X
    CHECK_THROWS_AS(simulate_detection(code, expected, {6}),
                    std::invalid_argument);             // out of range
    CHECK_THROWS_AS(simulate_detection(code, TernaryVector::parse("01"), {0}),
                    std::invalid_argument);             // length mismatch
}

TEST_CASE("exhaustive sweeps agree with the verifier in both directions") {
    // Weight-3 families on 6 points, 4 columns: the sweep over all X
    // placements and fault sets detects everything exactly when the family
    // is a valid code for the same (d, x).
    std::mt19937_64 rng(90210);
    const std::vector<TernaryVector> bases{
        TernaryVector::parse("0000"),
        random_binary_vector(4, rng),
    };
    int valid_seen = 0, invalid_seen = 0;
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Triple> blocks;
        while (blocks.size() < 4) {
            Point a = static_cast<Point>(rng() % 6);
            Point b = static_cast<Point>(rng() % 6);
            Point c = static_cast<Point>(rng() % 6);
            if (a == b || b == c || a == c) continue;
            Triple t{a, b, c};
            bool dup = false;
            for (const Triple& u : blocks) dup = dup || u == t;
            if (!dup) blocks.push_back(t);
        }
        for (int d = 1; d <= 2; ++d) {
            for (int x = 0; x <= 2; ++x) {
                XCode code = xcode_from_triples(6, d, x, blocks);
                const bool valid = is_xcode(code, d, x);
                (valid ? valid_seen : invalid_seen) += 1;
                CAPTURE(trial);
                CAPTURE(d);
                CAPTURE(x);
                CHECK(sweep_all_detected(code, d, x, bases) == valid);
            }
        }
    }
    CHECK(valid_seen >= 20);
    CHECK(invalid_seen >= 20);
}
