#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "xc3/xcode.hpp"

namespace xc3 {

// Symbol of a three-valued circuit response: fixed 0, fixed 1, or unknown.
enum class Trit : std::uint8_t { zero = 0, one = 1, x = 2 };

// Response vector over {0,1,X}.  One entry per circuit output.
class TernaryVector {
public:
    TernaryVector() = default;
    explicit TernaryVector(std::vector<Trit> entries) : entries_(std::move(entries)) {}

    // Accepts '0', '1', 'x', 'X'; throws std::invalid_argument otherwise.
    static TernaryVector parse(const std::string& text);

    std::size_t size() const { return entries_.size(); }
    Trit operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<Trit>& entries() const { return entries_; }

    // Prints unknowns as 'X'.
    std::string str() const;

    bool operator==(const TernaryVector&) const = default;

private:
    std::vector<Trit> entries_;
};

// Compacted signature of `v` under `code`: row i is X when some selected
// input is X there, otherwise the GF(2) sum of the selected inputs.
// Requires v.size() == code.n().
TernaryVector compact(const XCode& code, const TernaryVector& v);

// True when some position holds two definite, differing symbols.
bool detect_discrepancy(const TernaryVector& a, const TernaryVector& b);

// Flips `fault_positions` (0-indexed, definite positions of `expected`) in a
// concrete realization of `expected` and reports whether the compacted
// signatures differ.  The result does not depend on how the X entries are
// realized, so zeroes stand in for them.  An empty fault set yields false.
bool simulate_detection(const XCode& code, const TernaryVector& expected,
                        const std::vector<std::size_t>& fault_positions);

} // namespace xc3
