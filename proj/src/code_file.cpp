#include "xc3/code_file.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace xc3 {

using ordered_json = nlohmann::ordered_json;

CodeFile::CodeFile(std::uint32_t m_, int d_, int x_, std::vector<Triple> blocks_,
                   std::optional<Certificate> cert)
    : m(m_), d(d_), x(x_), blocks(std::move(blocks_)), certificate(std::move(cert)) {
    if (m < 1) throw std::invalid_argument("CodeFile: m >= 1 required");
    if (d < 1) throw std::invalid_argument("CodeFile: d >= 1 required");
    if (x < 0) throw std::invalid_argument("CodeFile: x >= 0 required");
    for (const Triple& t : blocks)
        if (t.max_point() >= m)
            throw std::invalid_argument("CodeFile: block uses a point outside 1..m");
    std::sort(blocks.begin(), blocks.end());
}

XCode CodeFile::to_xcode() const { return xcode_from_triples(m, d, x, blocks); }

namespace {

ordered_json certificate_to_json(const Certificate& c) {
    ordered_json j;
    j["method"] = c.method;
    if (c.p) j["p"] = *c.p;
    if (c.e0) j["e0"] = *c.e0;
    if (c.seed) j["seed"] = *c.seed;
    if (c.sampled) j["sampled"] = *c.sampled;
    if (c.violations_found) j["violations_found"] = *c.violations_found;
    if (c.realized_blocks) j["realized_blocks"] = *c.realized_blocks;
    if (c.realized_violations) j["realized_violations"] = *c.realized_violations;
    if (c.deletions) j["deletions"] = *c.deletions;
    if (c.final_n) j["final_n"] = *c.final_n;
    return j;
}

Certificate certificate_from_json(const ordered_json& j) {
    if (!j.is_object())
        throw std::invalid_argument("code file: certificate must be an object");
    Certificate c;
    if (!j.contains("method") || !j.at("method").is_string())
        throw std::invalid_argument("code file: certificate needs a string 'method'");
    c.method = j.at("method").get<std::string>();
    auto num = [&](const char* key) -> std::optional<double> {
        if (!j.contains(key)) return std::nullopt;
        if (!j.at(key).is_number())
            throw std::invalid_argument(std::string("code file: certificate field '") +
                                        key + "' must be a number");
        return j.at(key).get<double>();
    };
    auto uint = [&](const char* key) -> std::optional<std::uint64_t> {
        if (!j.contains(key)) return std::nullopt;
        if (!j.at(key).is_number_unsigned() && !j.at(key).is_number_integer())
            throw std::invalid_argument(std::string("code file: certificate field '") +
                                        key + "' must be an integer");
        return j.at(key).get<std::uint64_t>();
    };
    c.p = num("p");
    c.e0 = num("e0");
    c.seed = uint("seed");
    c.sampled = uint("sampled");
    c.violations_found = uint("violations_found");
    c.realized_blocks = uint("realized_blocks");
    c.realized_violations = uint("realized_violations");
    c.deletions = uint("deletions");
    c.final_n = uint("final_n");
    return c;
}

} // namespace

std::string serialize_json(const CodeFile& file) {
    ordered_json j;
    j["m"] = file.m;
    j["d"] = file.d;
    j["x"] = file.x;
    j["weight"] = 3;
    ordered_json blocks = ordered_json::array();
    for (const Triple& t : file.blocks) {
        const auto& p = t.points();
        blocks.push_back({p[0] + 1, p[1] + 1, p[2] + 1});
    }
    j["blocks"] = std::move(blocks);
    if (file.certificate) j["certificate"] = certificate_to_json(*file.certificate);
    return j.dump(2) + "\n";
}

CodeFile parse_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw std::invalid_argument(std::string("code file: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("code file: top level must be an object");
    for (const char* key : {"m", "d", "x", "blocks"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("code file: missing key '") + key + "'");
    if (!j.at("m").is_number_unsigned())
        throw std::invalid_argument("code file: 'm' must be a nonnegative integer");
    if (!j.at("d").is_number_integer())
        throw std::invalid_argument("code file: 'd' must be an integer");
    if (!j.at("x").is_number_integer())
        throw std::invalid_argument("code file: 'x' must be an integer");
    if (j.at("m").get<std::uint64_t>() > 0xFFFFFFFFull)
        throw std::invalid_argument("code file: 'm' is out of range");
    const auto m = j.at("m").get<std::uint32_t>();
    const int d = j.at("d").get<int>();
    const int x = j.at("x").get<int>();
    if (j.contains("weight") &&
        (!j.at("weight").is_number_integer() || j.at("weight").get<int>() != 3))
        throw std::invalid_argument("code file: only weight-3 codes are supported");

    if (!j.at("blocks").is_array())
        throw std::invalid_argument("code file: 'blocks' must be an array");
    std::vector<Triple> blocks;
    blocks.reserve(j.at("blocks").size());
    for (const auto& b : j.at("blocks")) {
        if (!b.is_array() || b.size() != 3)
            throw std::invalid_argument("code file: each block must list exactly 3 points");
        std::array<Point, 3> pts{};
        for (std::size_t i = 0; i < 3; ++i) {
            if (!b[i].is_number_unsigned() || b[i].get<std::uint64_t>() < 1 ||
                b[i].get<std::uint64_t>() > m)
                throw std::invalid_argument("code file: block points must lie in 1..m");
            pts[i] = b[i].get<Point>() - 1;
        }
        blocks.emplace_back(pts[0], pts[1], pts[2]);
    }

    std::optional<Certificate> cert;
    if (j.contains("certificate")) cert = certificate_from_json(j.at("certificate"));
    return CodeFile(m, d, x, std::move(blocks), std::move(cert));
}

std::string serialize_matrix(const CodeFile& file) {
    std::string out;
    out.reserve((file.blocks.size() + 1) * file.m);
    for (std::uint32_t row = 0; row < file.m; ++row) {
        for (const Triple& t : file.blocks) out.push_back(t.contains_point(row) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

namespace {

std::vector<std::string> read_matrix_rows(const std::string& text) {
    std::vector<std::string> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        rows.push_back(line);
    }
    if (rows.empty()) throw std::invalid_argument("matrix file: no rows");
    const std::size_t n = rows.front().size();
    for (const std::string& r : rows) {
        if (r.size() != n)
            throw std::invalid_argument("matrix file: rows have differing lengths");
        for (char c : r)
            if (c != '0' && c != '1')
                throw std::invalid_argument("matrix file: entries must be '0' or '1'");
    }
    return rows;
}

} // namespace

CodeFile parse_matrix(const std::string& text, int d, int x) {
    const std::vector<std::string> rows = read_matrix_rows(text);
    const std::size_t n = rows.front().size();
    const auto m = static_cast<std::uint32_t>(rows.size());

    std::vector<Triple> blocks;
    blocks.reserve(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<Point> pts;
        for (std::uint32_t row = 0; row < m; ++row)
            if (rows[row][col] == '1') pts.push_back(row);
        if (pts.size() != 3)
            throw std::invalid_argument("matrix file: column " + std::to_string(col + 1) +
                                        " has weight " + std::to_string(pts.size()) +
                                        ", expected 3");
        blocks.emplace_back(pts[0], pts[1], pts[2]);
    }
    return CodeFile(m, d, x, std::move(blocks));
}

XCode parse_matrix_columns(const std::string& text, int d, int x) {
    const std::vector<std::string> rows = read_matrix_rows(text);
    const std::size_t n = rows.front().size();
    const auto m = static_cast<std::uint32_t>(rows.size());

    XCode code;
    code.m = m;
    code.d = d;
    code.x = x;
    code.columns.reserve(n);
    for (std::size_t col = 0; col < n; ++col) {
        BitColumn c(m);
        for (std::uint32_t row = 0; row < m; ++row)
            if (rows[row][col] == '1') c.set(row);
        code.columns.push_back(std::move(c));
    }
    return code;
}

CodeFile parse_auto(const std::string& text, int d, int x) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        if (c == '{') return parse_json(text);
        break;
    }
    return parse_matrix(text, d, x);
}

} // namespace xc3
