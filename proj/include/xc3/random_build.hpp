#pragma once

/*
 * Randomized construction: sample every triple on m points independently
 * with probability p, then delete one block from each forbidden
 * configuration that survived sampling until none remain.  The expected
 * final size is at least the counting bound from bounds.hpp; the run record
 * keeps what actually happened.
 *
 * Repair never consults the full catalog: violations are located by
 * scanning subsets of the sampled blocks only, which is what keeps large m
 * affordable (the sample is small even when C(m,3) is astronomical).
 */

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "xc3/column_algebra.hpp"
#include "xc3/xcode.hpp"

namespace xc3 {

struct SampleRun {
    std::uint64_t seed = 0;
    double p = 0;
    std::vector<Triple> sampled;      // lexicographic order
    std::uint64_t violations_found = 0;
    std::vector<Triple> deleted;
    std::vector<Triple> final_blocks; // lexicographic order
};

// Deterministic in (m, p, seed): walks triples in lexicographic order and
// keeps each with probability p using one mt19937_64 draw per triple.
std::vector<Triple> sample_triples(std::uint32_t m, double p, std::uint64_t seed);

struct RepairResult {
    std::vector<Triple> kept;    // lexicographic order, violation-free
    std::vector<Triple> deleted;
    std::uint64_t violations_found = 0; // distinct witness sets in the input
};

// Greedy hitting pass: repeatedly delete the block lying in the most
// still-alive witness sets (ties: lexicographically smallest block) until
// none are left.  Deletes at most violations_found blocks.
RepairResult repair(std::span<const Triple> blocks, int d);

// sample + repair + verification wrap.  p defaults to recommended_p(m, d);
// maximize_p switches to the finite-m optimizer instead.
std::pair<XCode, SampleRun> construct_random(std::uint32_t m, int d, std::uint64_t seed,
                                             std::optional<double> p = std::nullopt,
                                             bool maximize_p = false);

} // namespace xc3
