#include "xc3/catalog.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "xc3/detail/witness_scan.hpp"

namespace xc3 {

using boost::multiprecision::cpp_int;

int span_bound(int config_size) {
    if (config_size < 3)
        throw std::invalid_argument("span_bound: configurations have >= 3 triples");
    if (config_size == 3) return 6;
    if (config_size == 4) return 8;
    const int i = config_size - 2;
    return 6 + (3 * i) / 2; // == 6 + ceil((3i - 1) / 2)
}

bool is_forbidden_config(std::span<const Triple> config, int d) {
    const int s = static_cast<int>(config.size());
    if (s < 3 || s - 2 > d) return false;

    std::vector<Triple> sorted(config.begin(), config.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("is_forbidden_config: triples must be distinct");

    std::vector<Triple> tail;
    for (int u = 0; u < s; ++u) {
        for (int v = u + 1; v < s; ++v) {
            tail.clear();
            for (int w = 0; w < s; ++w)
                if (w != u && w != v) tail.push_back(sorted[static_cast<std::size_t>(w)]);
            PointSet odd = odd_point_union(tail);

            PointSet cover;
            for (Point p : sorted[static_cast<std::size_t>(u)].points()) cover.push_back(p);
            for (Point p : sorted[static_cast<std::size_t>(v)].points()) cover.push_back(p);
            std::sort(cover.begin(), cover.end());

            if (std::includes(cover.begin(), cover.end(), odd.begin(), odd.end()))
                return true;
        }
    }
    return false;
}

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

cpp_int predicted_witness_bound_exact(std::uint32_t m, int d) {
    // Per tail size i: a forbidden config of size i+2 spans at most
    // span_bound(i+2) points, so choosing the span set and then the triples
    // within it over-counts every witness at least once.  When m is smaller
    // than the span bound, fall back to all (i+2)-subsets of all triples.
    cpp_int total = 0;
    for (int i = 1; i <= d; ++i) {
        const int s = i + 2;
        const unsigned sp = static_cast<unsigned>(span_bound(s));
        if (m >= sp) {
            cpp_int per_span = big_binom(big_binom(sp, 3), static_cast<unsigned>(s));
            total += big_binom(m, sp) * per_span;
        } else {
            total += big_binom(binom3(m), static_cast<unsigned>(s));
        }
    }
    return total;
}

void check_catalog_guards(std::uint32_t m, int d, const CatalogLimits& limits) {
    if (m < 3) throw std::invalid_argument("witness enumeration needs m >= 3");
    if (d < 1) throw std::invalid_argument("witness enumeration needs d >= 1");
    cpp_int predicted = predicted_witness_bound_exact(m, d);
    if (predicted > limits.max_witnesses)
        throw ResourceLimitError(
            "witness catalog for m=" + std::to_string(m) + ", d=" + std::to_string(d) +
            " may hold up to " + predicted.str() + " configurations (ceiling " +
            std::to_string(limits.max_witnesses) +
            "); use a smaller m, a lower d, or the randomized construction");
    if (m > 64)
        throw ResourceLimitError(
            "witness enumeration is limited to m <= 64 points; "
            "use the randomized construction for larger m");
}

} // namespace

std::uint64_t predicted_witness_bound(std::uint32_t m, int d) {
    cpp_int predicted = predicted_witness_bound_exact(m, d);
    if (predicted > std::numeric_limits<std::uint64_t>::max())
        return std::numeric_limits<std::uint64_t>::max();
    return static_cast<std::uint64_t>(predicted);
}

void enumerate_witnesses(std::uint32_t m, int d,
                         const std::function<void(const WitnessConfig&)>& sink,
                         const CatalogLimits& limits) {
    check_catalog_guards(m, d, limits);
    TripleUniverse uni(m);
    detail::AllTriplesUniverse all(uni);
    detail::scan_witnesses(all, d, [&](const std::vector<std::uint32_t>& ids,
                                       std::uint32_t p1, std::uint32_t p2) {
        WitnessConfig cfg;
        cfg.triples.reserve(ids.size());
        for (std::uint32_t id : ids) cfg.triples.push_back(uni.triple(id));
        for (std::size_t k = 0; k < ids.size(); ++k) {
            if (ids[k] == p1) cfg.pair_pos[0] = static_cast<std::uint8_t>(k);
            if (ids[k] == p2) cfg.pair_pos[1] = static_cast<std::uint8_t>(k);
        }
        sink(cfg);
    });
}

WitnessCatalog WitnessCatalog::build(std::uint32_t m, int d, const CatalogLimits& limits) {
    check_catalog_guards(m, d, limits);
    WitnessCatalog cat(m, d);
    detail::AllTriplesUniverse all(cat.uni_);

    detail::scan_witnesses(all, d, [&cat, &limits](const std::vector<std::uint32_t>& ids,
                                                   std::uint32_t p1, std::uint32_t p2) {
        if (cat.pair_pos_.size() >= limits.max_witnesses)
            throw ResourceLimitError("witness catalog exceeded its ceiling while scanning");
        std::array<std::uint8_t, 2> pp{};
        for (std::size_t k = 0; k < ids.size(); ++k) {
            if (ids[k] == p1) pp[0] = static_cast<std::uint8_t>(k);
            if (ids[k] == p2) pp[1] = static_cast<std::uint8_t>(k);
        }
        cat.pool_.insert(cat.pool_.end(), ids.begin(), ids.end());
        cat.off_.push_back(cat.pool_.size());
        cat.pair_pos_.push_back(pp);
    });

    // incidence index, CSR layout
    const std::uint32_t nt = cat.uni_.size();
    cat.inc_off_.assign(nt + 1, 0);
    for (std::uint32_t id : cat.pool_) ++cat.inc_off_[id + 1];
    for (std::uint32_t t = 0; t < nt; ++t) cat.inc_off_[t + 1] += cat.inc_off_[t];
    cat.inc_list_.resize(cat.pool_.size());
    std::vector<std::uint64_t> cursor(cat.inc_off_.begin(), cat.inc_off_.end() - 1);
    for (std::size_t w = 0; w < cat.pair_pos_.size(); ++w)
        for (std::uint32_t id : cat.config(w))
            cat.inc_list_[cursor[id]++] = static_cast<std::uint32_t>(w);
    return cat;
}

WitnessConfig WitnessCatalog::config_view(std::size_t i) const {
    WitnessConfig cfg;
    auto ids = config(i);
    cfg.triples.reserve(ids.size());
    for (std::uint32_t id : ids) cfg.triples.push_back(uni_.triple(id));
    cfg.pair_pos = pair_pos_[i];
    return cfg;
}

std::vector<WitnessConfig> incident_witnesses(const Triple& t, std::uint32_t m, int d,
                                              const CatalogLimits& limits) {
    WitnessCatalog cat = WitnessCatalog::build(m, d, limits);
    std::vector<WitnessConfig> out;
    const std::uint32_t id = triple_rank(m, t);
    for (std::uint32_t w : cat.incident(id)) out.push_back(cat.config_view(w));
    return out;
}

std::vector<WitnessConfig> witnesses_in_family(std::span<const Triple> blocks, int d) {
    std::vector<Triple> sorted(blocks.begin(), blocks.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("witnesses_in_family: blocks must be distinct");

    std::vector<WitnessConfig> out;
    if (sorted.size() < 3 || d < 1) return out;

    std::uint32_t width = 0;
    for (const auto& t : sorted) width = std::max(width, t.max_point() + 1);
    detail::FamilyUniverse fam(sorted, width);

    detail::scan_witnesses(fam, d, [&](const std::vector<std::uint32_t>& ids,
                                       std::uint32_t p1, std::uint32_t p2) {
        WitnessConfig cfg;
        cfg.triples.reserve(ids.size());
        for (std::uint32_t id : ids) cfg.triples.push_back(fam.triple(id));
        for (std::size_t k = 0; k < ids.size(); ++k) {
            if (ids[k] == p1) cfg.pair_pos[0] = static_cast<std::uint8_t>(k);
            if (ids[k] == p2) cfg.pair_pos[1] = static_cast<std::uint8_t>(k);
        }
        out.push_back(std::move(cfg));
    });
    return out;
}

} // namespace xc3
