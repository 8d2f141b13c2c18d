#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "xc3/bounds.hpp"
#include "xc3/catalog.hpp"
#include "xc3/oracle.hpp"
#include "xc3/xcode.hpp"

using namespace xc3;

namespace {

std::vector<std::vector<Triple>> sorted_sets(std::vector<std::vector<Triple>> v) {
    for (auto& s : v) std::sort(s.begin(), s.end());
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<std::vector<Triple>> catalog_sets(std::uint32_t m, int d) {
    auto cat = WitnessCatalog::build(m, d);
    std::vector<std::vector<Triple>> out;
    for (std::size_t i = 0; i < cat.size(); ++i)
        out.push_back(cat.config_view(i).triples);
    return sorted_sets(std::move(out));
}

} // namespace

TEST_CASE("maxima for d = 1 follow the pair bound") {
    const std::uint32_t expected[5] = {1, 2, 3, 4, 7};
    for (std::uint32_t m = 3; m <= 7; ++m) {
        CAPTURE(m);
        auto res = max_code_exhaustive(m, 1, 2);
        CHECK(res.max_n == expected[m - 3]);
        CHECK(static_cast<double>(res.max_n) <= upper_bound_d1(m).value + 1e-9);
    }
    // The bound is met exactly at m = 3, 4, 7 and is strict at m = 5, 6.
    CHECK(max_code_exhaustive(3, 1, 2).max_n == 1);
    CHECK(static_cast<double>(max_code_exhaustive(7, 1, 2).max_n) ==
          upper_bound_d1(7).value);
    CHECK(static_cast<double>(max_code_exhaustive(5, 1, 2).max_n) <
          upper_bound_d1(5).value);
    CHECK(static_cast<double>(max_code_exhaustive(6, 1, 2).max_n) <
          upper_bound_d1(6).value);
}

TEST_CASE("every returned example verifies and attains max_n") {
    for (std::uint32_t m = 3; m <= 7; ++m) {
        std::uint32_t prev = 0;
        for (int d = 1; d <= 3; ++d) {
            CAPTURE(m);
            CAPTURE(d);
            auto res = max_code_exhaustive(m, d, 2);
            CHECK(res.m == m);
            CHECK(res.d == d);
            CHECK(res.x == 2);
            if (m >= 4) CHECK(res.extension_checks > 0); // m = 3 has no candidates
            REQUIRE(res.example_code.size() == res.max_n);
            REQUIRE(res.max_n >= 1);
            CHECK(res.example_code.front() == Triple{0, 1, 2}); // pinned by relabeling
            XCode code = xcode_from_triples(m, d, 2, res.example_code);
            CHECK(check_constant_weight(code, 3));
            CHECK(is_xcode(code, d, 2));
            // raising d can only shrink the maximum
            if (d > 1) CHECK(res.max_n <= prev);
            prev = res.max_n;
        }
    }
}

TEST_CASE("frozen counts pin the search behaviour") {
    {
        auto res = max_code_exhaustive(6, 1, 2);
        CHECK(res.max_n == 4);
        CHECK(res.extension_checks == 467);
    }
    {
        auto res = max_code_exhaustive(5, 2, 2);
        CHECK(res.max_n == 3);
        CHECK(res.extension_checks == 49);
    }
    {
        auto res = max_code_exhaustive(6, 2, 2);
        CHECK(res.max_n == 4);
        CHECK(res.extension_checks == 455);
    }
    {
        auto res = max_code_exhaustive(7, 2, 2);
        CHECK(res.max_n == 5);
        CHECK(res.extension_checks == 6286);
    }
    CHECK(max_code_exhaustive(7, 3, 2).max_n == 5);
}

TEST_CASE("x = 0 and x = 1 degenerate as the definitions demand") {
    // x = 0, d <= 3: no XOR of up to d distinct weight-3 columns vanishes
    // (two distinct columns differ somewhere; an odd count has odd weight),
    // so every distinct family works and the maximum is all of them.
    CHECK(max_code_exhaustive(5, 2, 0).max_n == binom3(5));
    CHECK(max_code_exhaustive(4, 3, 0).max_n == 4);
    // x = 1, d = 1: one weight-3 column never sits inside another.
    CHECK(max_code_exhaustive(4, 1, 1).max_n == 4);
    // x = 1, d = 2: the symmetric difference of two pair-sharing triples
    // fits inside a third, which caps m = 4 at two blocks.
    CHECK(max_code_exhaustive(4, 2, 1).max_n == 2);
}

TEST_CASE("validity is invariant under point relabeling") {
    auto res = max_code_exhaustive(6, 2, 2);
    const Point sigma[6] = {3, 5, 0, 1, 4, 2};
    std::vector<Triple> mapped;
    for (const Triple& t : res.example_code) {
        auto pts = t.points();
        mapped.push_back(Triple{sigma[pts[0]], sigma[pts[1]], sigma[pts[2]]});
    }
    XCode code = xcode_from_triples(6, 2, 2, mapped);
    CHECK(is_xcode(code, 2, 2));
    CHECK(code.n() == res.max_n);
}

TEST_CASE("search guards") {
    CHECK_THROWS_AS(max_code_exhaustive(10, 1, 2), ResourceLimitError);
    {
        OracleLimits lim;
        lim.max_m = 5;
        CHECK_THROWS_AS(max_code_exhaustive(6, 1, 2, lim), ResourceLimitError);
        lim.override_guard = true; // warns on stderr, then runs
        CHECK(max_code_exhaustive(6, 1, 2, lim).max_n == 4);
    }
    {
        OracleLimits lim;
        lim.max_m = 100;
        lim.override_guard = true;
        CHECK_THROWS_AS(max_code_exhaustive(70, 1, 2, lim), ResourceLimitError);
    }
    CHECK_THROWS_AS(max_code_exhaustive(2, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(max_code_exhaustive(4, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(max_code_exhaustive(4, 1, -1), std::invalid_argument);
}

TEST_CASE("brute-forced forbidden sets agree with the catalog") {
    {
        auto sets = forbidden_sets_bruteforce(4, 1);
        REQUIRE(sets.size() == 4);
        for (const auto& s : sets) CHECK(s.size() == 3);
        CHECK(sorted_sets(sets) == catalog_sets(4, 1));
    }
    CHECK(forbidden_sets_bruteforce(3, 3).empty());
    CHECK(sorted_sets(forbidden_sets_bruteforce(5, 2)) == catalog_sets(5, 2));
    CHECK(sorted_sets(forbidden_sets_bruteforce(6, 2)) == catalog_sets(6, 2));
}

TEST_CASE("brute-force guards") {
    CHECK_THROWS_AS(forbidden_sets_bruteforce(8, 1), ResourceLimitError);
    CHECK_THROWS_AS(forbidden_sets_bruteforce(7, 4), ResourceLimitError);
    CHECK_THROWS_AS(forbidden_sets_bruteforce(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(forbidden_sets_bruteforce(4, 0), std::invalid_argument);
}
