#include "xc3/derand_build.hpp"

#include <cmath>
#include <stdexcept>

#include "xc3/bounds.hpp"
#include "xc3/random_build.hpp"

namespace xc3 {

DecisionState DecisionState::initial(std::uint32_t m, int d, double p) {
    DecisionState st;
    st.m = m;
    st.d = d;
    st.p = p;
    st.decisions.assign(binom3(m), Decision::undecided);
    st.step = 0;
    return st;
}

double score_s(const WitnessConfig& c, const DecisionState& state) {
    int accepted = 0;
    for (const auto& t : c.triples) {
        switch (state.decision(t)) {
            case Decision::rejected: return 0.0;
            case Decision::accepted: ++accepted; break;
            case Decision::undecided: break;
        }
    }
    return std::pow(state.p, static_cast<double>(c.size() - accepted));
}

double conditional_expectation(const DecisionState& state, const WitnessCatalog& catalog) {
    const std::uint32_t total = static_cast<std::uint32_t>(state.decisions.size());
    std::uint64_t accepted = 0;
    for (std::uint32_t id = 0; id < total; ++id)
        if (state.decisions[id] == Decision::accepted) ++accepted;

    double sum = 0.0;
    for (std::size_t w = 0; w < catalog.size(); ++w) {
        int acc = 0;
        bool dead = false;
        for (std::uint32_t id : catalog.config(w)) {
            const Decision dec = state.decisions[id];
            if (dec == Decision::rejected) { dead = true; break; }
            if (dec == Decision::accepted) ++acc;
        }
        if (!dead)
            sum += std::pow(state.p, static_cast<double>(catalog.config_size(w) - acc));
    }
    const double undecided = static_cast<double>(total - state.step);
    return static_cast<double>(accepted) + undecided * state.p - sum;
}

namespace {

// Sum of p^(|C| - r - 1) over live configs containing the triple, evaluated
// from the raw decision vector.  The builder below keeps the same quantity
// incrementally; this form backs decide_next and the equivalence tests.
double branch_sum(const DecisionState& state, const WitnessCatalog& catalog,
                  std::uint32_t triple_id) {
    double s = 0.0;
    for (std::uint32_t w : catalog.incident(triple_id)) {
        int acc = 0;
        bool dead = false;
        for (std::uint32_t id : catalog.config(w)) {
            if (id == triple_id) continue;
            const Decision dec = state.decisions[id];
            if (dec == Decision::rejected) { dead = true; break; }
            if (dec == Decision::accepted) ++acc;
        }
        if (!dead)
            s += std::pow(state.p, static_cast<double>(catalog.config_size(w) - acc - 1));
    }
    return s;
}

} // namespace

int decide_next(const DecisionState& state, const WitnessCatalog& catalog) {
    if (state.step >= state.decisions.size())
        throw std::invalid_argument("decide_next: no undecided triple left");
    return branch_sum(state, catalog, state.step) < 1.0 ? 1 : 0;
}

std::pair<XCode, ConstructionCertificate>
construct_derandomized(std::uint32_t m, int d, const DerandOptions& options) {
    if (m < 3) throw std::invalid_argument("construct_derandomized: m >= 3 required");
    if (d < 2) throw std::invalid_argument("construct_derandomized: d >= 2 required");

    double p;
    if (options.p) {
        p = *options.p;
        if (p < 0.0 || p > 1.0)
            throw std::invalid_argument("construct_derandomized: p must lie in [0, 1]");
    } else {
        p = options.maximize_p ? maximize_expected_p(m, d) : recommended_p(m, d);
    }

    const WitnessCatalog catalog = WitnessCatalog::build(m, d, options.limits);
    const std::uint32_t total = catalog.universe().size();

    // exponents range over 0..d+1 (config sizes 3..d+2, one member excluded)
    std::vector<double> pow_p(static_cast<std::size_t>(d) + 3, 1.0);
    for (std::size_t k = 1; k < pow_p.size(); ++k) pow_p[k] = pow_p[k - 1] * p;

    std::vector<std::uint32_t> accepted_in(catalog.size(), 0);
    std::vector<char> dead(catalog.size(), 0);

    double e = static_cast<double>(total) * p;
    for (std::size_t w = 0; w < catalog.size(); ++w)
        e -= pow_p[static_cast<std::size_t>(catalog.config_size(w))];
    const double e0 = e;

    ConstructionCertificate cert;
    cert.p = p;
    cert.e0 = e0;
    if (options.record_trace) {
        cert.e_trace.emplace();
        cert.e_trace->reserve(total + 1);
        cert.e_trace->push_back(e0);
    }

    DecisionState st = DecisionState::initial(m, d, p);
    std::vector<Triple> accepted_blocks;

    for (std::uint32_t id = 0; id < total; ++id) {
        double branch = 0.0;
        for (std::uint32_t w : catalog.incident(id)) {
            if (dead[w]) continue;
            branch += pow_p[static_cast<std::size_t>(catalog.config_size(w)) -
                            accepted_in[w] - 1];
        }
        // E(accept) - E(reject) = (1 - p)(1 - branch); strict comparison
        // sends exact ties to rejection.
        const bool take = branch < 1.0;
        if (take) {
            st.decisions[id] = Decision::accepted;
            accepted_blocks.push_back(catalog.universe().triple(id));
            for (std::uint32_t w : catalog.incident(id)) ++accepted_in[w];
            e += (1.0 - p) * (1.0 - branch);
        } else {
            st.decisions[id] = Decision::rejected;
            for (std::uint32_t w : catalog.incident(id)) dead[w] = 1;
            e += p * (branch - 1.0);
        }
        ++st.step;
        if (cert.e_trace) cert.e_trace->push_back(e);
    }

    cert.realized_blocks = accepted_blocks.size();
    for (std::size_t w = 0; w < catalog.size(); ++w)
        if (accepted_in[w] == static_cast<std::uint32_t>(catalog.config_size(w)))
            ++cert.realized_violations;

    auto rep = repair(accepted_blocks, d);
    cert.deletions = rep.deleted.size();
    cert.final_n = rep.kept.size();

    XCode code = xcode_from_triples(m, d, 2, rep.kept);
    return {std::move(code), cert};
}

} // namespace xc3
