#include "xc3/compaction.hpp"

#include <stdexcept>

namespace xc3 {

TernaryVector TernaryVector::parse(const std::string& text) {
    std::vector<Trit> entries;
    entries.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '0': entries.push_back(Trit::zero); break;
            case '1': entries.push_back(Trit::one); break;
            case 'x':
            case 'X': entries.push_back(Trit::x); break;
            default:
                throw std::invalid_argument(
                    std::string("TernaryVector::parse: bad symbol '") + c + "'");
        }
    }
    return TernaryVector(std::move(entries));
}

std::string TernaryVector::str() const {
    std::string out;
    out.reserve(entries_.size());
    for (Trit t : entries_)
        out.push_back(t == Trit::zero ? '0' : t == Trit::one ? '1' : 'X');
    return out;
}

TernaryVector compact(const XCode& code, const TernaryVector& v) {
    if (v.size() != code.n())
        throw std::invalid_argument("compact: vector length must equal the code length");

    std::vector<Trit> out(code.m, Trit::zero);
    for (std::size_t j = 0; j < code.n(); ++j) {
        const Trit t = v[j];
        if (t == Trit::zero) continue;
        for (Point row : code.columns[j].support()) {
            auto& cell = out[row];
            if (cell == Trit::x) continue;
            if (t == Trit::x)
                cell = Trit::x;
            else
                cell = (cell == Trit::one) ? Trit::zero : Trit::one;
        }
    }
    return TernaryVector(std::move(out));
}

bool detect_discrepancy(const TernaryVector& a, const TernaryVector& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("detect_discrepancy: length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == Trit::x || b[i] == Trit::x) continue;
        if (a[i] != b[i]) return true;
    }
    return false;
}

bool simulate_detection(const XCode& code, const TernaryVector& expected,
                        const std::vector<std::size_t>& fault_positions) {
    if (expected.size() != code.n())
        throw std::invalid_argument(
            "simulate_detection: vector length must equal the code length");

    // Concrete fault-free realization: every X pinned to 0.  Which rows end
    // up discrepant depends only on the fault set, not on that choice.
    std::vector<Trit> observed;
    observed.reserve(expected.size());
    for (Trit t : expected.entries())
        observed.push_back(t == Trit::x ? Trit::zero : t);

    for (std::size_t pos : fault_positions) {
        if (pos >= expected.size())
            throw std::invalid_argument("simulate_detection: fault position out of range");
        if (expected[pos] == Trit::x)
            throw std::invalid_argument(
                "simulate_detection: faults must sit at definite positions");
        observed[pos] = (observed[pos] == Trit::one) ? Trit::zero : Trit::one;
    }

    return detect_discrepancy(compact(code, TernaryVector(std::move(observed))),
                              compact(code, expected));
}

} // namespace xc3
