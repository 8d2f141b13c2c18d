#include "xc3/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "xc3/catalog.hpp"

namespace xc3 {

using boost::multiprecision::cpp_int;
using BigFloat = boost::multiprecision::cpp_bin_float_100;

namespace {

cpp_int big_binom(const cpp_int& n, unsigned k) {
    if (n < k) return 0;
    cpp_int r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - static_cast<int>(i) + 1;
        r /= static_cast<int>(i);
    }
    return r;
}

struct ExpectationPoly {
    BigFloat linear;                 // C(m,3)
    std::vector<BigFloat> coef;      // coef[i-1] for exponent i+2, i = 1..d
};

ExpectationPoly build_poly(std::uint64_t m, int d) {
    if (m < 1) throw std::invalid_argument("expected_codewords: m >= 1 required");
    if (d < 2) throw std::invalid_argument("expected_codewords: d >= 2 required");
    ExpectationPoly poly;
    poly.linear = BigFloat(big_binom(cpp_int(m), 3));
    poly.coef.reserve(static_cast<std::size_t>(d));
    for (int i = 1; i <= d; ++i) {
        const unsigned sp = static_cast<unsigned>(span_bound(i + 2));
        cpp_int c = big_binom(cpp_int(m), sp) *
                    big_binom(big_binom(sp, 3), static_cast<unsigned>(i) + 2);
        poly.coef.push_back(BigFloat(c));
    }
    return poly;
}

double eval_poly(const ExpectationPoly& poly, double p) {
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("expected_codewords: p must lie in [0, 1]");
    const BigFloat bp(p);
    BigFloat acc = poly.linear * bp;
    BigFloat power = bp * bp * bp;
    for (std::size_t i = 0; i < poly.coef.size(); ++i) {
        acc -= poly.coef[i] * power;
        power *= bp;
    }
    return acc.convert_to<double>();
}

void require_d_ge2(int d, const char* who) {
    if (d < 2) throw std::invalid_argument(std::string(who) + ": d >= 2 required");
}

} // namespace

LowerBoundConstants asymptotic_constants() {
    LowerBoundConstants c{};
    c.alpha = 0.25 * std::pow(1.0 / 1749.0, 1.0 / 3.0);
    c.beta = 4.0 / (std::pow(15.0, 0.75) * std::pow(378131.0, 0.25));
    c.gamma = (5.0 / 3.0) * std::pow(5.0 / 10606681.0, 0.2) * std::pow(6.0, -0.8);
    return c;
}

double expected_codewords(std::uint64_t m, int d, double p) {
    return eval_poly(build_poly(m, d), p);
}

double recommended_p(std::uint64_t m, int d) {
    if (m < 1) throw std::invalid_argument("recommended_p: m >= 1 required");
    require_d_ge2(d, "recommended_p");
    const double dm = static_cast<double>(m);
    double p = 0;
    if (d == 2)
        p = 2.0 * std::pow(1.0 / 1749.0, 1.0 / 3.0) * std::pow(dm, -5.0 / 3.0);
    else if (d == 3)
        p = 2.0 * std::pow(15.0 / 378131.0, 0.25) * std::pow(dm, -7.0 / 4.0);
    else
        p = 2.0 * std::pow(30.0 / 10606681.0, 0.2) * std::pow(dm, -9.0 / 5.0);
    return std::clamp(p, 0.0, 1.0);
}

double asymptotic_lower_bound(std::uint64_t m, int d) {
    if (m < 1) throw std::invalid_argument("asymptotic_lower_bound: m >= 1 required");
    require_d_ge2(d, "asymptotic_lower_bound");
    const auto c = asymptotic_constants();
    const double dm = static_cast<double>(m);
    if (d == 2) return c.alpha * std::pow(dm, 4.0 / 3.0);
    if (d == 3) return c.beta * std::pow(dm, 5.0 / 4.0);
    return c.gamma * std::pow(dm, 6.0 / 5.0);
}

UpperBoundD1 upper_bound_d1(std::uint64_t m) {
    if (m < 1) throw std::invalid_argument("upper_bound_d1: m >= 1 required");
    UpperBoundD1 b{};
    b.value = static_cast<double>(m) * static_cast<double>(m - 1) / 6.0;
    b.attainable = (m % 6 == 1 || m % 6 == 3);
    return b;
}

double maximize_expected_p(std::uint64_t m, int d) {
    const ExpectationPoly poly = build_poly(m, d);
    // golden-section; the objective is concave on [0, 1]
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = 0.0, hi = 1.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = eval_poly(poly, x1), f2 = eval_poly(poly, x2);
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        if (f1 < f2) {
            lo = x1; x1 = x2; f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = eval_poly(poly, x2);
        } else {
            hi = x2; x2 = x1; f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = eval_poly(poly, x1);
        }
    }
    return (lo + hi) / 2.0;
}

BoundReport make_bound_report(std::uint64_t m, int d, std::optional<double> p,
                              bool maximize_p) {
    require_d_ge2(d, "make_bound_report");
    BoundReport r;
    r.m = m;
    r.d = d;
    if (p) {
        r.p = *p;
        r.p_source = "given";
    } else if (maximize_p) {
        r.p = maximize_expected_p(m, d);
        r.p_source = "maximized";
    } else {
        r.p = recommended_p(m, d);
        r.p_source = "recommended";
    }
    r.expected = expected_codewords(m, d, r.p);
    r.asymptotic_lower = asymptotic_lower_bound(m, d);
    const auto u = upper_bound_d1(m);
    r.d1_upper = u.value;
    r.d1_attainable = u.attainable;
    r.constants = asymptotic_constants();
    return r;
}

} // namespace xc3
