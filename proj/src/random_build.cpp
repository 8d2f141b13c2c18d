#include "xc3/random_build.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "xc3/bounds.hpp"
#include "xc3/catalog.hpp"

namespace xc3 {

std::vector<Triple> sample_triples(std::uint32_t m, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("sample_triples: p must lie in [0, 1]");
    std::vector<Triple> out;
    if (m < 3 || p == 0.0) return out;

    std::mt19937_64 rng(seed);
    // One fixed-layout draw per triple keeps runs reproducible across
    // standard libraries; distributions would not be.
    const auto keep = [&]() {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        return u < p;
    };
    for (Point a = 0; a + 2 < m; ++a)
        for (Point b = a + 1; b + 1 < m; ++b)
            for (Point c = b + 1; c < m; ++c)
                if (keep()) out.emplace_back(a, b, c);
    return out;
}

RepairResult repair(std::span<const Triple> blocks, int d) {
    RepairResult res;
    std::vector<Triple> live(blocks.begin(), blocks.end());
    std::sort(live.begin(), live.end());

    auto witnesses = witnesses_in_family(live, d);
    res.violations_found = witnesses.size();

    // Greedy hitting set over the witness configs found in the sample.
    // Deleting a block can only remove witnesses, never create them, so one
    // materialized pass suffices.
    std::vector<char> witness_alive(witnesses.size(), 1);
    std::map<Triple, std::vector<std::uint32_t>> membership;
    for (std::uint32_t w = 0; w < witnesses.size(); ++w)
        for (const auto& t : witnesses[w].triples)
            membership[t].push_back(w);

    std::size_t remaining = witnesses.size();
    std::map<Triple, bool> deleted;
    while (remaining > 0) {
        const Triple* best = nullptr;
        std::size_t best_count = 0;
        for (const auto& [t, ws] : membership) {
            if (deleted.count(t)) continue;
            std::size_t c = 0;
            for (std::uint32_t w : ws)
                if (witness_alive[w]) ++c;
            if (c > best_count) { // ties resolved by map order = lex smallest
                best_count = c;
                best = &t;
            }
        }
        if (!best) break; // defensive; remaining witnesses need live members
        deleted[*best] = true;
        res.deleted.push_back(*best);
        for (std::uint32_t w : membership[*best]) {
            if (witness_alive[w]) {
                witness_alive[w] = 0;
                --remaining;
            }
        }
    }

    for (const auto& t : live)
        if (!deleted.count(t)) res.kept.push_back(t);
    return res;
}

std::pair<XCode, SampleRun> construct_random(std::uint32_t m, int d, std::uint64_t seed,
                                             std::optional<double> p, bool maximize_p) {
    if (m < 3) throw std::invalid_argument("construct_random: m >= 3 required");
    if (d < 2) throw std::invalid_argument("construct_random: d >= 2 required");

    SampleRun run;
    run.seed = seed;
    if (p) {
        if (*p < 0.0 || *p > 1.0)
            throw std::invalid_argument("construct_random: p must lie in [0, 1]");
        run.p = *p;
    } else {
        run.p = maximize_p ? maximize_expected_p(m, d) : recommended_p(m, d);
    }

    run.sampled = sample_triples(m, run.p, seed);
    auto rep = repair(run.sampled, d);
    run.violations_found = rep.violations_found;
    run.deleted = std::move(rep.deleted);
    run.final_blocks = std::move(rep.kept);

    XCode code = xcode_from_triples(m, d, 2, run.final_blocks);
    return {std::move(code), std::move(run)};
}

} // namespace xc3
