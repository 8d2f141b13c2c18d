// Command-line front end: construct, verify, enumerate, bounds, search,
// simulate.  Exit codes: 0 success/valid, 1 verification or detection
// failure, 2 usage or input-format error, 3 resource guard tripped.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "xc3/bounds.hpp"
#include "xc3/catalog.hpp"
#include "xc3/code_file.hpp"
#include "xc3/compaction.hpp"
#include "xc3/derand_build.hpp"
#include "xc3/errors.hpp"
#include "xc3/oracle.hpp"
#include "xc3/random_build.hpp"
#include "xc3/xcode.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

xc3::CatalogLimits limits_from_env() {
    xc3::CatalogLimits limits;
    if (const char* raw = std::getenv("XC3_WITNESS_CEILING")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(raw, &end, 10);
        if (end == raw || *end != '\0' || v == 0)
            throw std::invalid_argument(
                "XC3_WITNESS_CEILING must be a positive integer");
        limits.max_witnesses = v;
    }
    return limits;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

std::string triple_str(const xc3::Triple& t) {
    const auto& p = t.points();
    return std::to_string(p[0] + 1) + "," + std::to_string(p[1] + 1) + "," +
           std::to_string(p[2] + 1);
}

struct ConstructArgs {
    std::uint32_t m = 0;
    int d = 0;
    std::string method = "derand";
    std::optional<double> p;
    bool maximize_p = false;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::string out;
    std::string format = "json";
};

int run_construct(const ConstructArgs& a) {
    if (a.method == "derand" && a.seed_given)
        throw std::invalid_argument(
            "--seed applies only to --method random; the derandomized "
            "construction is deterministic");

    xc3::XCode code;
    xc3::Certificate cert;
    if (a.method == "derand") {
        xc3::DerandOptions opt;
        opt.p = a.p;
        opt.maximize_p = a.maximize_p;
        opt.limits = limits_from_env();
        auto [built, c] = xc3::construct_derandomized(a.m, a.d, opt);
        code = std::move(built);
        cert.method = "derandomized";
        cert.p = c.p;
        cert.e0 = c.e0;
        cert.realized_blocks = c.realized_blocks;
        cert.realized_violations = c.realized_violations;
        cert.deletions = c.deletions;
        cert.final_n = c.final_n;
    } else {
        auto [built, run] = xc3::construct_random(a.m, a.d, a.seed, a.p, a.maximize_p);
        code = std::move(built);
        cert.method = "random";
        cert.p = run.p;
        cert.seed = run.seed;
        cert.sampled = run.sampled.size();
        cert.violations_found = run.violations_found;
        cert.deletions = run.deleted.size();
        cert.final_n = run.final_blocks.size();
    }

    if (!xc3::check_constant_weight(code, 3) || !xc3::is_xcode(code, code.d, code.x)) {
        std::cerr << "internal error: constructed code failed verification\n";
        return kExitInvalid;
    }

    auto triples = xc3::xcode_triples(code);
    if (!triples) {
        std::cerr << "internal error: constructed code is not weight-3\n";
        return kExitInvalid;
    }
    const xc3::CodeFile file(code.m, code.d, code.x, std::move(*triples), cert);
    write_output(a.out, a.format == "json" ? xc3::serialize_json(file)
                                           : xc3::serialize_matrix(file));
    std::cerr << "constructed (m=" << code.m << ", n=" << code.n() << ", d=" << code.d
              << ", x=" << code.x << ") via " << cert.method << "\n";
    return 0;
}

struct VerifyArgs {
    std::string in;
    std::optional<int> d;
    std::optional<int> x;
};

int run_verify(const VerifyArgs& a) {
    const std::string text = read_file(a.in);

    bool looks_json = false;
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        looks_json = (c == '{');
        break;
    }

    xc3::CodeFile file;
    if (looks_json) {
        file = xc3::parse_json(text);
    } else {
        if (!a.d)
            throw std::invalid_argument(
                "matrix input carries no parameters; pass --d (and optionally --x)");
        file = xc3::parse_matrix(text, *a.d, a.x.value_or(2));
    }
    const int d = a.d.value_or(file.d);
    const int x = a.x.value_or(file.x);

    const xc3::XCode code = xc3::xcode_from_triples(file.m, d, x, file.blocks);
    const auto witness = xc3::find_violation(code, d, x);
    if (!witness) {
        std::cout << "valid (m=" << file.m << ", n=" << code.n() << ", d=" << d
                  << ", x=" << x << ")\n";
        return 0;
    }

    std::cout << "invalid: the union of columns {";
    for (std::size_t i = 0; i < witness->x_part.size(); ++i)
        std::cout << (i ? "," : "") << witness->x_part[i] + 1;
    std::cout << "} contains the GF(2) sum of columns {";
    for (std::size_t i = 0; i < witness->s_part.size(); ++i)
        std::cout << (i ? "," : "") << witness->s_part[i] + 1;
    std::cout << "}\n";
    for (int col : witness->x_part)
        std::cout << "  column " << col + 1 << " = ("
                  << triple_str(file.blocks[static_cast<std::size_t>(col)]) << ")\n";
    for (int col : witness->s_part)
        std::cout << "  column " << col + 1 << " = ("
                  << triple_str(file.blocks[static_cast<std::size_t>(col)]) << ")\n";
    return kExitInvalid;
}

int run_enumerate(std::uint32_t m, int d, bool count_only) {
    const auto limits = limits_from_env();
    std::uint64_t count = 0;
    std::string line;
    xc3::enumerate_witnesses(
        m, d,
        [&](const xc3::WitnessConfig& c) {
            ++count;
            if (count_only) return;
            line.clear();
            for (std::size_t i = 0; i < c.triples.size(); ++i) {
                if (i) line.push_back(' ');
                line += triple_str(c.triples[i]);
            }
            line.push_back('\n');
            std::cout << line;
        },
        limits);
    if (count_only) std::cout << count << "\n";
    return 0;
}

struct BoundsArgs {
    std::uint64_t m = 0;
    int d = 0;
    std::optional<double> p;
    bool maximize_p = false;
    bool as_json = false;
};

int run_bounds(const BoundsArgs& a) {
    const auto r = xc3::make_bound_report(a.m, a.d, a.p, a.maximize_p);
    if (a.as_json) {
        ordered_json j;
        j["m"] = r.m;
        j["d"] = r.d;
        j["p"] = r.p;
        j["p_source"] = r.p_source;
        j["expected_codewords"] = r.expected;
        j["asymptotic_lower_bound"] = r.asymptotic_lower;
        j["d1_upper_bound"] = r.d1_upper;
        j["d1_upper_attainable"] = r.d1_attainable;
        j["constants"] = {{"alpha", r.constants.alpha},
                          {"beta", r.constants.beta},
                          {"gamma", r.constants.gamma}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    auto row = [](const std::string& label, const auto& value) {
        std::cout << label << std::string(label.size() < 24 ? 24 - label.size() : 1, ' ')
                  << value << "\n";
    };
    row("m", r.m);
    row("d", r.d);
    row("p (" + r.p_source + ")", r.p);
    row("expected codewords", r.expected);
    row("asymptotic lower bound", r.asymptotic_lower);
    std::ostringstream d1;
    d1 << r.d1_upper << (r.d1_attainable ? "  (attainable)" : "  (not attainable)");
    row("d=1 upper bound", d1.str());
    return 0;
}

int run_search(std::uint32_t m, int d, int x, bool override_guard) {
    xc3::OracleLimits limits;
    limits.override_guard = override_guard;
    const auto res = xc3::max_code_exhaustive(m, d, x, limits);
    ordered_json j;
    j["m"] = res.m;
    j["d"] = res.d;
    j["x"] = res.x;
    j["max_n"] = res.max_n;
    j["extension_checks"] = res.extension_checks;
    ordered_json blocks = ordered_json::array();
    for (const auto& t : res.example_code) {
        const auto& p = t.points();
        blocks.push_back({p[0] + 1, p[1] + 1, p[2] + 1});
    }
    j["example_code"] = std::move(blocks);
    std::cout << j.dump(2) << "\n";
    return 0;
}

struct SimulateArgs {
    std::string code_path;
    std::string expected;
    std::string observed;
    std::string faults;
};

int run_simulate(const SimulateArgs& a) {
    const std::string text = read_file(a.code_path);
    bool looks_json = false;
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        looks_json = (c == '{');
        break;
    }
    // d and x play no role in compaction; matrix columns may have any weight.
    const xc3::XCode code = looks_json ? xc3::parse_json(text).to_xcode()
                                       : xc3::parse_matrix_columns(text, 1, 2);
    const auto expected = xc3::TernaryVector::parse(a.expected);

    if (!a.observed.empty()) {
        const auto observed = xc3::TernaryVector::parse(a.observed);
        const auto ce = xc3::compact(code, expected);
        const auto co = xc3::compact(code, observed);
        std::cout << "expected  " << expected.str() << " -> " << ce.str() << "\n"
                  << "observed  " << observed.str() << " -> " << co.str() << "\n"
                  << "discrepancy detected: "
                  << (xc3::detect_discrepancy(ce, co) ? "yes" : "no") << "\n";
        return 0;
    }

    std::vector<std::size_t> faults;
    std::stringstream ss(a.faults);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("--faults must be a comma-separated list of "
                                        "1-indexed positions");
        }
        if (pos != item.size() || v == 0)
            throw std::invalid_argument("--faults must be a comma-separated list of "
                                        "1-indexed positions");
        faults.push_back(v - 1);
    }
    if (faults.empty())
        throw std::invalid_argument("--faults must name at least one position");

    const bool detected = xc3::simulate_detection(code, expected, faults);
    std::cout << "expected  " << expected.str() << " -> "
              << xc3::compact(code, expected).str() << "\n"
              << "faults at ";
    for (std::size_t i = 0; i < faults.size(); ++i)
        std::cout << (i ? "," : "") << faults[i] + 1;
    std::cout << "\ndiscrepancy detected: " << (detected ? "yes" : "no") << "\n";
    return detected ? 0 : kExitInvalid;
}

} // namespace

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);

    CLI::App app{"weight-3 test-compaction codes: construction, verification, "
                 "enumeration, and bounds"};
    app.require_subcommand(1);

    ConstructArgs ca;
    auto* construct = app.add_subcommand(
        "construct", "build a code and emit it as JSON or a 0/1 matrix");
    construct->add_option("--m", ca.m, "number of circuit outputs (rows)")->required();
    construct->add_option("--d", ca.d, "fault-multiplicity bound")->required();
    construct->add_option("--method", ca.method, "derand (default) or random")
        ->check(CLI::IsMember({"derand", "random"}));
    auto* p_opt = construct->add_option("--p", ca.p, "sampling probability in [0,1]");
    auto* max_opt = construct->add_flag("--maximize-p", ca.maximize_p,
                                        "numerically maximize the expected size");
    max_opt->excludes(p_opt);
    auto* seed_opt =
        construct->add_option("--seed", ca.seed, "RNG seed (random method only)");
    construct->add_option("--out", ca.out, "output path (default: stdout)");
    construct->add_option("--format", ca.format, "json (default) or matrix")
        ->check(CLI::IsMember({"json", "matrix"}));

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "check a code file, print a "
                                                "violation witness if any");
    verify->add_option("--in", va.in, "code file (JSON or matrix)")->required();
    verify->add_option("--d", va.d, "override / supply the fault bound");
    verify->add_option("--x", va.x, "override / supply the union size");

    std::uint32_t em = 0;
    int ed = 0;
    bool ecount = false;
    auto* enumerate = app.add_subcommand(
        "enumerate", "list every forbidden configuration on m points");
    enumerate->add_option("--m", em, "number of points")->required();
    enumerate->add_option("--d", ed, "fault-multiplicity bound")->required();
    enumerate->add_flag("--count-only", ecount, "print only the count");

    BoundsArgs ba;
    auto* bounds = app.add_subcommand("bounds", "expected-size and asymptotic bounds");
    bounds->add_option("--m", ba.m, "number of points")->required();
    bounds->add_option("--d", ba.d, "fault-multiplicity bound (>= 2)")->required();
    auto* bp = bounds->add_option("--p", ba.p, "evaluate at this probability");
    bounds->add_flag("--maximize-p", ba.maximize_p, "numerically maximize over p")
        ->excludes(bp);
    bounds->add_flag("--json", ba.as_json, "emit a JSON object");

    std::uint32_t sm = 0;
    int sd = 0, sx = 2;
    bool soverride = false;
    auto* search = app.add_subcommand(
        "search", "exhaustive maximum-size search (tiny instances)");
    search->add_option("--m", sm, "number of points")->required();
    search->add_option("--d", sd, "fault-multiplicity bound")->required();
    search->add_option("--x", sx, "union size (default 2)");
    search->add_flag("--max-m-override", soverride,
                     "bypass the m guard (may run a very long time)");

    SimulateArgs sa;
    auto* simulate = app.add_subcommand(
        "simulate", "compact response vectors and test fault detection");
    simulate->add_option("--code", sa.code_path, "code file (JSON or matrix)")
        ->required();
    simulate->add_option("--expected", sa.expected,
                         "fault-free response over 0/1/X")
        ->required();
    auto* obs = simulate->add_option("--observed", sa.observed,
                                     "observed response to compare against");
    simulate->add_option("--faults", sa.faults,
                         "comma-separated 1-indexed faulty positions")
        ->excludes(obs);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (construct->parsed()) {
            ca.seed_given = seed_opt->count() > 0;
            return run_construct(ca);
        }
        if (verify->parsed()) return run_verify(va);
        if (enumerate->parsed()) return run_enumerate(em, ed, ecount);
        if (bounds->parsed()) return run_bounds(ba);
        if (search->parsed()) return run_search(sm, sd, sx, soverride);
        if (simulate->parsed()) {
            if (sa.observed.empty() && sa.faults.empty())
                throw std::invalid_argument(
                    "simulate needs --observed or --faults");
            return run_simulate(sa);
        }
    } catch (const xc3::ResourceLimitError& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
