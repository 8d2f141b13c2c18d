#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "xc3/xcode.hpp"

namespace xc3 {

// Provenance block attached to a constructed code.  Only the fields that
// make sense for the producing method are set.
struct Certificate {
    std::string method; // "derandomized", "random", or "external"
    std::optional<double> p;
    std::optional<double> e0;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> sampled;
    std::optional<std::uint64_t> violations_found;
    std::optional<std::uint64_t> realized_blocks;
    std::optional<std::uint64_t> realized_violations;
    std::optional<std::uint64_t> deletions;
    std::optional<std::uint64_t> final_n;

    bool operator==(const Certificate&) const = default;
};

// Serializable form of a weight-3 code: parameters plus the block list in
// canonical (sorted, 0-indexed in memory) order.  Files use 1-indexed
// points.
struct CodeFile {
    std::uint32_t m = 0;
    int d = 0;
    int x = 0;
    std::vector<Triple> blocks; // canonicalized by the constructors below
    std::optional<Certificate> certificate;

    CodeFile() = default;
    CodeFile(std::uint32_t m, int d, int x, std::vector<Triple> blocks,
             std::optional<Certificate> cert = std::nullopt);

    XCode to_xcode() const;

    bool operator==(const CodeFile&) const = default;
};

// JSON object with keys m, d, x, weight, blocks (arrays of three 1-indexed
// points), and optionally certificate.
std::string serialize_json(const CodeFile& file);
CodeFile parse_json(const std::string& text);

// Plain matrix text: m lines of n characters ('0'/'1'), one column per
// block.  Parameters d and x are not stored in this format.
std::string serialize_matrix(const CodeFile& file);
CodeFile parse_matrix(const std::string& text, int d, int x);

// Matrix text with no weight restriction, for the simulator and for codes
// that are not weight-3.  d and x come from the caller.
XCode parse_matrix_columns(const std::string& text, int d, int x);

// Dispatches on the first non-space byte: '{' means JSON, anything else is
// read as matrix text (with the supplied d and x).
CodeFile parse_auto(const std::string& text, int d, int x);

} // namespace xc3
