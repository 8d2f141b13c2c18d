#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "xc3/bounds.hpp"
#include "xc3/catalog.hpp"

using namespace xc3;
using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

namespace {

cpp_int binom(std::uint64_t n, int k) {
    if (k < 0 || static_cast<std::uint64_t>(k) > n) return 0;
    cpp_int r = 1;
    for (int i = 0; i < k; ++i) {
        r *= cpp_int(n - static_cast<std::uint64_t>(i));
        r /= (i + 1);
    }
    return r;
}

// From-scratch exact-rational evaluation of the expectation formula; the
// double p converts to a rational with no rounding, so this shares no code
// or arithmetic with the implementation under test.
double exact_expectation(std::uint64_t m, int d, double p) {
    const cpp_rational pr(p);
    cpp_rational total = cpp_rational(binom(m, 3)) * pr;
    for (int i = 1; i <= d; ++i) {
        const int span = span_bound(i + 2);
        const cpp_int span_triples = binom(static_cast<std::uint64_t>(span), 3);
        const cpp_int coef =
            binom(m, span) * binom(static_cast<std::uint64_t>(span_triples), i + 2);
        cpp_rational term(coef);
        for (int e = 0; e < i + 2; ++e) term *= pr;
        total -= term;
    }
    return static_cast<double>(total);
}

bool close_rel(double a, double b, double rel) {
    return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

} // namespace

TEST_CASE("asymptotic constants to three significant digits") {
    const auto c = asymptotic_constants();
    CHECK(std::abs(c.alpha - 2.07e-2) < 0.005e-2);
    CHECK(std::abs(c.beta - 2.12e-2) < 0.005e-2);
    CHECK(std::abs(c.gamma - 2.16e-2) < 0.005e-2);
    // full-precision pins so a regression shows up loudly
    CHECK(c.alpha == doctest::Approx(0.0207496164).epsilon(1e-8));
    CHECK(c.beta == doctest::Approx(0.0211631825).epsilon(1e-8));
    CHECK(c.gamma == doctest::Approx(0.0215777347).epsilon(1e-8));
}

TEST_CASE("expected_codewords reproduces the frozen reference value") {
    const double got = expected_codewords(10, 2, 0.01);
    CHECK(close_rel(got, 0.7953195, 1e-9));
}

TEST_CASE("expected_codewords agrees with exact rational arithmetic") {
    const struct {
        std::uint64_t m;
        int d;
        double p;
    } cases[] = {
        {10, 2, 0.01}, {8, 2, 0.1},    {10, 2, 0.05},  {7, 3, 0.1},
        {12, 4, 0.001}, {20, 4, 0.003}, {50, 2, 0.001}, {13, 5, 0.002},
        {6, 2, 0.0},    {6, 2, 1.0},    {1000, 3, 1e-5},
    };
    for (const auto& c : cases) {
        const double want = exact_expectation(c.m, c.d, c.p);
        const double got = expected_codewords(c.m, c.d, c.p);
        CHECK_MESSAGE(close_rel(got, want, 1e-12), "m=", c.m, " d=", c.d, " p=", c.p,
                      " got=", got, " want=", want);
    }
}

TEST_CASE("terms whose span exceeds m vanish") {
    // on 5 points both correction spans (6 and 8) exceed m, leaving C(5,3) p
    for (double p : {0.0, 0.1, 0.25, 0.5, 1.0}) {
        CHECK(expected_codewords(5, 2, p) == doctest::Approx(10.0 * p).epsilon(1e-12));
        CHECK(expected_codewords(5, 3, p) == doctest::Approx(10.0 * p).epsilon(1e-12));
    }
    // m=7, d=3: only the span-6 term survives
    CHECK(expected_codewords(7, 3, 0.1) == doctest::Approx(-4.48).epsilon(1e-10));
}

TEST_CASE("recommended_p frozen values and clamping") {
    CHECK(recommended_p(1, 2) == doctest::Approx(0.1659969312).epsilon(1e-8));
    CHECK(recommended_p(1000, 2) == doctest::Approx(1.6599693116e-6).epsilon(1e-8));
    CHECK(recommended_p(1, 3) == doctest::Approx(0.1587238684).epsilon(1e-8));
    CHECK(recommended_p(1, 4) == doctest::Approx(0.1553596897).epsilon(1e-8));
    // d beyond 4 reuses the d=4 exponent family
    CHECK(recommended_p(50, 7) == recommended_p(50, 4));
    for (std::uint64_t m : {1ull, 2ull, 10ull, 100000ull}) {
        const double p = recommended_p(m, 2);
        CHECK(p >= 0.0);
        CHECK(p <= 1.0);
    }
}

TEST_CASE("asymptotic lower bound values and convergence") {
    CHECK(asymptotic_lower_bound(1000, 2) == doctest::Approx(207.496164).epsilon(1e-6));

    // expectation at the recommended p approaches the asymptotic bound from
    // below as m grows
    const double r5 = expected_codewords(100000, 2, recommended_p(100000, 2)) /
                      asymptotic_lower_bound(100000, 2);
    CHECK(r5 == doctest::Approx(0.992535).epsilon(5e-4));
    const double r6 = expected_codewords(1000000, 2, recommended_p(1000000, 2)) /
                      asymptotic_lower_bound(1000000, 2);
    CHECK(r6 == doctest::Approx(0.996515).epsilon(5e-4));
    CHECK(r5 < 1.0);
    CHECK(r6 < 1.0);
    CHECK(r5 < r6);

    const double r3 = expected_codewords(1000000, 3, recommended_p(1000000, 3)) /
                      asymptotic_lower_bound(1000000, 3);
    CHECK(r3 == doctest::Approx(0.991069).epsilon(5e-4));
}

TEST_CASE("expectation is positive at the recommended p once all spans fit") {
    for (std::uint64_t m : {30ull, 100ull, 1000ull})
        for (int d : {2, 3, 4})
            CHECK(expected_codewords(m, d, recommended_p(m, d)) > 0.0);
}

TEST_CASE("maximize_expected_p finds the interior optimum") {
    const double p = maximize_expected_p(10, 2);
    CHECK(p == doctest::Approx(0.0094522462).epsilon(1e-5));
    const double best = expected_codewords(10, 2, p);
    CHECK(best == doctest::Approx(0.8001582048).epsilon(1e-7));
    for (double dp : {1e-4, 1e-3})
        for (double sign : {-1.0, 1.0})
            CHECK(best >= expected_codewords(10, 2, p + sign * dp));
    CHECK(best > expected_codewords(10, 2, recommended_p(10, 2)));
}

TEST_CASE("maximize_expected_p hits the boundary when the bound is increasing") {
    // on 5 points the formula is 10p, so the maximum sits at p=1
    CHECK(maximize_expected_p(5, 2) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("d=1 upper bound table") {
    const struct {
        std::uint64_t m;
        double value;
        bool attainable;
    } cases[] = {
        {1, 0.0, true},   {3, 1.0, true},  {4, 2.0, false}, {6, 5.0, false},
        {7, 7.0, true},   {8, 28.0 / 3.0, false}, {9, 12.0, true}, {13, 26.0, true},
    };
    for (const auto& c : cases) {
        const auto u = upper_bound_d1(c.m);
        CHECK(u.value == doctest::Approx(c.value).epsilon(1e-12));
        CHECK(u.attainable == c.attainable);
    }
}

TEST_CASE("bound report assembles the right fields") {
    const auto given = make_bound_report(100, 2, 0.001);
    CHECK(given.p == 0.001);
    CHECK(given.p_source == "given");
    CHECK(given.expected == doctest::Approx(exact_expectation(100, 2, 0.001)).epsilon(1e-10));

    const auto rec = make_bound_report(100, 2, std::nullopt);
    CHECK(rec.p_source == "recommended");
    CHECK(rec.p == doctest::Approx(recommended_p(100, 2)).epsilon(1e-15));

    const auto maxed = make_bound_report(10, 2, std::nullopt, true);
    CHECK(maxed.p_source == "maximized");
    const auto rec10 = make_bound_report(10, 2, std::nullopt);
    CHECK(maxed.expected >= rec10.expected - 1e-12);
    CHECK(maxed.d1_upper == doctest::Approx(15.0).epsilon(1e-12));
    CHECK(!maxed.d1_attainable);
    CHECK(maxed.constants.alpha == asymptotic_constants().alpha);
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(expected_codewords(10, 2, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(expected_codewords(10, 2, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(expected_codewords(0, 2, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(expected_codewords(10, 1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(recommended_p(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(recommended_p(10, 1), std::invalid_argument);
    CHECK_THROWS_AS(asymptotic_lower_bound(10, 1), std::invalid_argument);
    CHECK_THROWS_AS(maximize_expected_p(10, 1), std::invalid_argument);
    CHECK_THROWS_AS(upper_bound_d1(0), std::invalid_argument);
    CHECK_THROWS_AS(make_bound_report(10, 1, std::nullopt), std::invalid_argument);
}
