#pragma once

/*
 * X-code representation and the definition-level checker.
 *
 * An (m, n, d, x) X-code is an m-row binary matrix, one column per codeword,
 * such that the superimposed (OR) sum of any x columns never contains the
 * GF(2) sum of any other 1..d columns.  x = 0 degenerates to "the GF(2) sum
 * of any up-to-d columns is nonzero".  find_violation is the brute-force
 * oracle straight off that definition; it is meant for desk-scale n and for
 * certifying the outputs of the constructions.
 */

#include <optional>
#include <vector>

#include "xc3/column_algebra.hpp"

namespace xc3 {

// Plain data.  d and x record what the code was built for; the checker
// takes its own d, x so a code can be probed against other parameters.
// Blocks of a *verified* code are pairwise distinct, but the struct itself
// is permissive so that defective inputs can be examined.
struct XCode {
    std::uint32_t m = 0;
    int d = 0;
    int x = 0;
    std::vector<BitColumn> columns;

    std::size_t n() const { return columns.size(); }
};

XCode xcode_from_triples(std::uint32_t m, int d, int x,
                         const std::vector<Triple>& blocks);

// Supports of all columns, as triples, when every column has weight 3.
std::optional<std::vector<Triple>> xcode_triples(const XCode& code);

// Column indices (into code.columns) witnessing a violation:
// gf2 sum over s_part is contained in the OR over x_part.
struct ViolationWitness {
    std::vector<int> x_part; // |x_part| == x, ascending
    std::vector<int> s_part; // 1 <= |s_part| <= d, ascending, disjoint from x_part
};

// First violation in deterministic order: x-subsets in lexicographic index
// order; within one x-subset, s-subsets by size then lexicographic.
// std::nullopt means the code satisfies the (d, x) property.  n <= x is
// vacuously violation-free.
std::optional<ViolationWitness> find_violation(const XCode& code, int d, int x);

bool is_xcode(const XCode& code, int d, int x);

bool check_constant_weight(const XCode& code, int w);

// Re-checks a reported witness through the column ops; used by tests and
// by the CLI before printing one.
bool witness_holds(const XCode& code, const ViolationWitness& w);

} // namespace xc3
