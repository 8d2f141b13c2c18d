#pragma once

/*
 * Counting bounds for weight-3 codes at x = 2.
 *
 * Sampling each triple independently with probability p and deleting one
 * block per surviving forbidden configuration keeps, in expectation, at
 * least
 *
 *   N(m, d, p) = C(m,3) p - sum_{i=1..d} C(m, s_i) C(C(s_i,3), i+2) p^{i+2},
 *
 * where s_i = span_bound(i + 2).  Binomials with upper index above m are
 * zero.  Coefficients are computed exactly in arbitrary precision and only
 * combined with p in extended floating point, so the result is good to
 * double accuracy for any desk-scale m.
 *
 * Optimizing p per d gives the asymptotic lower bounds
 *   alpha m^{4/3} (d = 2),  beta m^{5/4} (d = 3),  gamma m^{6/5} (d >= 4).
 * For d = 1 a counting argument caps the code size at m(m-1)/6, attained
 * exactly when m = 1 or 3 (mod 6).
 */

#include <cstdint>
#include <optional>
#include <string>

namespace xc3 {

struct LowerBoundConstants {
    double alpha; // d = 2
    double beta;  // d = 3
    double gamma; // d >= 4
};

LowerBoundConstants asymptotic_constants();

// N(m, d, p) above.  Requires m >= 1, d >= 2, 0 <= p <= 1.
double expected_codewords(std::uint64_t m, int d, double p);

// Near-optimal sampling probability for large m, clamped to [0, 1]:
//   d = 2 : 2 (1/1749)^{1/3} m^{-5/3}
//   d = 3 : 2 (15/378131)^{1/4} m^{-7/4}
//   d >= 4: 2 (30/10606681)^{1/5} m^{-9/5}
double recommended_p(std::uint64_t m, int d);

// alpha m^{4/3} / beta m^{5/4} / gamma m^{6/5} per d; requires d >= 2.
double asymptotic_lower_bound(std::uint64_t m, int d);

struct UpperBoundD1 {
    double value;    // m (m - 1) / 6
    bool attainable; // exactly when m = 1 or 3 (mod 6)
};

UpperBoundD1 upper_bound_d1(std::uint64_t m);

// argmax of expected_codewords(m, d, .) over [0, 1] by golden-section
// search; the objective is concave in p.
double maximize_expected_p(std::uint64_t m, int d);

struct BoundReport {
    std::uint64_t m = 0;
    int d = 0;
    double p = 0;
    std::string p_source; // "given", "recommended", or "maximized"
    double expected = 0;
    double asymptotic_lower = 0;
    double d1_upper = 0;
    bool d1_attainable = false;
    LowerBoundConstants constants{};
};

BoundReport make_bound_report(std::uint64_t m, int d, std::optional<double> p,
                              bool maximize_p = false);

} // namespace xc3
