#pragma once

/*
 * Deterministic construction by the method of conditional expectations.
 *
 * Triples are decided one by one in lexicographic order.  With decisions
 * t_1..t_i made, the tracked quantity is
 *
 *   E = |accepted| + (#undecided) p - sum_C s(C),
 *   s(C) = 0 if some member of C is rejected, else p^(|C| - r),
 *
 * over all witness configs C of the (m, d) catalog, r = accepted members.
 * E is exactly the conditional expectation of (blocks kept) - (witness sets
 * realized) when the undecided triples are completed at random with
 * probability p.  Deciding the next triple toward the larger branch never
 * decreases E, so the fully decided value |B| - |X| is at least the initial
 * e0 = C(m,3) p - sum_C p^|C|.
 *
 * The branch comparison reduces to one incremental sum: accept T exactly
 * when  sum over live C containing T of p^(|C| - r - 1)  is below 1.  A
 * config with every other member accepted contributes p^0 = 1, so the rule
 * never completes a witness; the trailing deletion pass is kept for the
 * accounting but has nothing to do.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "xc3/catalog.hpp"
#include "xc3/xcode.hpp"

namespace xc3 {

enum class Decision : std::uint8_t { undecided = 0, accepted = 1, rejected = 2 };

struct DecisionState {
    std::uint32_t m = 0;
    int d = 0;
    double p = 0;
    std::vector<Decision> decisions; // indexed by triple id, lexicographic
    std::uint32_t step = 0;          // number of decided triples (a prefix)

    static DecisionState initial(std::uint32_t m, int d, double p);
    Decision decision(const Triple& t) const {
        return decisions[triple_rank(m, t)];
    }
};

// s(C) for one witness config under the current prefix.
double score_s(const WitnessConfig& c, const DecisionState& state);

// E under the current prefix; O(catalog) pass, used as the reference
// evaluation and for e0.
double conditional_expectation(const DecisionState& state, const WitnessCatalog& catalog);

// 1 to accept the next undecided triple (id == state.step), 0 to reject.
// Ties go to rejection.
int decide_next(const DecisionState& state, const WitnessCatalog& catalog);

struct ConstructionCertificate {
    double p = 0; // probability the expectations were evaluated at
    double e0 = 0;
    std::optional<std::vector<double>> e_trace; // e0, then E after each step
    std::uint64_t realized_blocks = 0;          // accepted triples
    std::uint64_t realized_violations = 0;      // witness sets fully accepted
    std::uint64_t deletions = 0;
    std::uint64_t final_n = 0;                  // realized_blocks - deletions
};

struct DerandOptions {
    std::optional<double> p;      // default: recommended_p(m, d)
    bool maximize_p = false;      // use the finite-m optimizer instead
    bool record_trace = false;
    CatalogLimits limits{};
};

// Fully deterministic: equal (m, d, options) give identical output.
// Catalog guards propagate as ResourceLimitError.
std::pair<XCode, ConstructionCertificate>
construct_derandomized(std::uint32_t m, int d, const DerandOptions& options = {});

} // namespace xc3
