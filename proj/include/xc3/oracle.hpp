#pragma once

/*
 * Ground-truth answers for tiny instances, by exhaustion.  The code search
 * runs a depth-first branch and bound over lexicographically increasing
 * block sequences with incremental violation checks; relabeling lets the
 * first block be pinned to {0,1,2}.  Exponential by nature, hence the size
 * guards; everything bigger belongs to the constructions.
 */

#include <cstdint>
#include <vector>

#include "xc3/column_algebra.hpp"
#include "xc3/errors.hpp"

namespace xc3 {

struct OracleResult {
    std::uint32_t m = 0;
    int d = 0;
    int x = 0;
    std::uint32_t max_n = 0;
    std::uint64_t extension_checks = 0; // candidate feasibility tests performed
    std::vector<Triple> example_code;   // one maximum code
};

struct OracleLimits {
    std::uint32_t max_m = 9;
    bool override_guard = false; // bypass max_m; a warning is printed to stderr
};

// Maximum n such that some weight-3 (m, n, d, x) code exists, plus a code
// attaining it.  Requires m >= 3, d >= 1, x >= 0.
OracleResult max_code_exhaustive(std::uint32_t m, int d, int x,
                                 const OracleLimits& limits = {});

// Every forbidden configuration on m points for distance d, found by testing
// all triple subsets of size 3..d+2 against is_forbidden_config.  The
// independent cross-check for the catalog; guarded to m <= 7, d <= 3.
std::vector<std::vector<Triple>> forbidden_sets_bruteforce(std::uint32_t m, int d);

} // namespace xc3
