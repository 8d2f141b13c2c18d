#pragma once

/*
 * Forbidden-configuration catalog for weight-3 codes at x = 2.
 *
 * A configuration (set of >= 3 distinct triples) is forbidden for distance d
 * iff it splits into a pair {A1, A2} and a tail S, 1 <= |S| = |c| - 2 <= d,
 * with odd_point_union(S) inside A1 OR A2.  These are exactly the block-set
 * violations a weight-3 (d, 2) code must avoid, and the derandomized builder
 * walks all of them for a given (m, d).
 *
 * Point spans are tightly limited: a forbidden configuration of size s covers
 * at most span_bound(s) points, which is what makes full enumeration feasible
 * at desk scale and drives the a-priori resource guard.
 */

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "xc3/column_algebra.hpp"
#include "xc3/errors.hpp"

namespace xc3 {

// Largest number of points a forbidden configuration of the given size can
// cover: 6 for pairs plus one tail triple, 8 for two tail triples, and
// 6 + floor(3i/2) for tails of i >= 3 (each point outside the pair cover
// must be hit an even number of times by the tail).
int span_bound(int config_size);

// True iff some split of `config` into a pair and a tail of <= d triples
// satisfies the parity condition above.  Configs of size < 3 or > d + 2
// are never forbidden.  Duplicate triples are rejected.
bool is_forbidden_config(std::span<const Triple> config, int d);

struct WitnessConfig {
    std::vector<Triple> triples;           // sorted ascending
    std::array<std::uint8_t, 2> pair_pos;  // positions of the attached pair

    std::array<Triple, 2> pair() const {
        return {triples[pair_pos[0]], triples[pair_pos[1]]};
    }
    std::vector<Triple> tail() const {
        std::vector<Triple> out;
        for (std::size_t i = 0; i < triples.size(); ++i)
            if (i != pair_pos[0] && i != pair_pos[1]) out.push_back(triples[i]);
        return out;
    }
    int size() const { return static_cast<int>(triples.size()); }
};

struct CatalogLimits {
    // Refuse to enumerate when the a-priori witness bound exceeds this.
    std::uint64_t max_witnesses = 100'000'000;
};

// Upper bound on the number of witnesses for (m, d), saturated at uint64 max.
// This is the span-based product bound, not an exact count.
std::uint64_t predicted_witness_bound(std::uint32_t m, int d);

// Streams every forbidden configuration on m points for distance d, each
// exactly once, with a canonical pair attached.  Deterministic order.
// Throws ResourceLimitError when the predicted count exceeds the ceiling
// (use a smaller m or the randomized construction) and std::invalid_argument
// for m < 3 or d < 1.
void enumerate_witnesses(std::uint32_t m, int d,
                         const std::function<void(const WitnessConfig&)>& sink,
                         const CatalogLimits& limits = {});

// Materialized catalog with a triple -> witnesses index; the derandomized
// builder's working set.  Configs are stored as sorted triple ids over the
// lexicographic TripleUniverse on m points.
class WitnessCatalog {
public:
    static WitnessCatalog build(std::uint32_t m, int d, const CatalogLimits& limits = {});

    std::uint32_t m() const { return m_; }
    int d() const { return d_; }
    const TripleUniverse& universe() const { return uni_; }

    std::size_t size() const { return pair_pos_.size(); }
    std::span<const std::uint32_t> config(std::size_t i) const {
        return {pool_.data() + off_[i], pool_.data() + off_[i + 1]};
    }
    int config_size(std::size_t i) const {
        return static_cast<int>(off_[i + 1] - off_[i]);
    }
    std::array<std::uint8_t, 2> pair_pos(std::size_t i) const { return pair_pos_[i]; }

    // Witness indices whose config contains the given triple id.
    std::span<const std::uint32_t> incident(std::uint32_t triple_id) const {
        return {inc_list_.data() + inc_off_[triple_id],
                inc_list_.data() + inc_off_[triple_id + 1]};
    }

    WitnessConfig config_view(std::size_t i) const;

private:
    WitnessCatalog(std::uint32_t m, int d) : m_(m), d_(d), uni_(m) {}

    std::uint32_t m_;
    int d_;
    TripleUniverse uni_;
    std::vector<std::uint32_t> pool_;
    std::vector<std::uint64_t> off_{0};
    std::vector<std::array<std::uint8_t, 2>> pair_pos_;
    std::vector<std::uint64_t> inc_off_;
    std::vector<std::uint32_t> inc_list_;
};

// Witnesses whose triple set contains t.  Convenience wrapper that builds a
// fresh catalog; hold a WitnessCatalog for repeated queries.
std::vector<WitnessConfig> incident_witnesses(const Triple& t, std::uint32_t m, int d,
                                              const CatalogLimits& limits = {});

// Every witness whose triples all belong to `blocks` (distinct, any order),
// each exactly once.  Used by repair and self-checks; touches only subsets
// of the family, never the full (m, d) catalog.
std::vector<WitnessConfig> witnesses_in_family(std::span<const Triple> blocks, int d);

} // namespace xc3
