#pragma once

#include <cstdint>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <json.hpp>

#include "rmcov/core.hpp"
#include "rmcov/secondorder.hpp"
#include "rmcov/verify.hpp"

namespace rmcov::cli {

inline constexpr const char* kOutputSchemaVersion = "rmcov.cli/1";

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Bad invocation: reported with exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class InputFormat { none, anf, hex, fixture };

struct Command {
    std::string verb;
    InputFormat format = InputFormat::none;
    std::string input;
    int n = 0;  // 0: infer
    int r = -1;
    bool json = false;
    std::uint64_t seed = verify::Config{}.seed;
    int trials = verify::Config{}.concat_trials;
    std::uint64_t budget = verify::Config{}.witness_budget;
    unsigned threads = 1;
    std::vector<std::string> checks;             // verify: groups to run, empty = all
    std::vector<std::string> fixture_overrides;  // verify: NAME=ANF
    bool timing = true;
};

inline const std::vector<std::string>& verbs()
{
    static const std::vector<std::string> v = {"nl",  "nl2",    "anf",     "spectrum", "nfh",           "fh",
                                               "s16", "verify", "witness", "bounds",   "explain-layout"};
    return v;
}

/// Parses a function given as ANF text, a hex table or a fixture name.
///
/// For ANF input n must be given unless the highest index is 7; for hex
/// input n follows from the digit count.
inline TruthTable parse_function(std::string_view spec, InputFormat format, int n)
{
    if (n != 0 && (n < kMinVars || n > kMaxVars)) {
        throw UsageError("n=" + std::to_string(n) + " out of range [" + std::to_string(kMinVars) + ", " +
                         std::to_string(kMaxVars) + "]");
    }
    try {
        switch (format) {
        case InputFormat::anf: {
            if (n == 0) {
                if (max_anf_index(spec) != kMaxVars) {
                    throw UsageError("ANF '" + std::string(spec) +
                                     "' does not determine the variable count; pass -n");
                }
                n = kMaxVars;
            }
            return from_anf(parse_anf(spec, n));
        }
        case InputFormat::hex: {
            std::string_view digits = spec;
            if (digits.size() >= 2 && digits[0] == '0' && (digits[1] == 'x' || digits[1] == 'X')) {
                digits.remove_prefix(2);
            }
            if (n == 0) {
                for (int k = kMinVars; k <= kMaxVars; ++k) {
                    if (digits.size() == (std::size_t{1} << k) / 4) {
                        n = k;
                    }
                }
                if (n == 0) {
                    throw ParseError("hex table length " + std::to_string(digits.size()) +
                                         " matches no n in [3, 7] (2, 4, 8, 16 or 32 digits)",
                                     0, std::string(spec));
                }
            }
            return parse_hex(spec, n);
        }
        case InputFormat::fixture: {
            if (n != 0 && n != 6) {
                throw UsageError("fixture functions have n=6, got -n " + std::to_string(n));
            }
            return from_anf(verify::fixture_anf(spec));
        }
        case InputFormat::none: break;
        }
    } catch (const UsageError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    throw UsageError("no input function: pass --anf, --hex or --fun");
}

namespace detail {

using Json = nlohmann::ordered_json;

inline Json envelope(const std::string& verb)
{
    Json j;
    j["schema_version"] = kOutputSchemaVersion;
    j["verb"] = verb;
    return j;
}

inline Json function_json(const TruthTable& f)
{
    Json j;
    j["n"] = f.vars();
    j["anf"] = format_anf(to_anf(f));
    j["hex"] = format_hex(f);
    return j;
}

inline void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

inline int require_r(const Command& c)
{
    if (c.r < 0) {
        throw UsageError(c.verb + " needs -r <nonlinearity>");
    }
    return c.r;
}

inline verify::Config verify_config(const Command& c)
{
    verify::Config config;
    config.seed = c.seed;
    config.concat_trials = c.trials;
    config.witness_budget = c.budget;
    config.threads = c.threads;
    for (const auto& g : c.checks) {
        const auto& groups = verify::check_groups();
        if (std::find(groups.begin(), groups.end(), g) == groups.end()) {
            std::string known;
            for (const auto& k : groups) {
                known += " " + k;
            }
            throw UsageError("unknown check group '" + g + "' (known:" + known + ")");
        }
        config.groups.insert(g);
    }
    for (const auto& o : c.fixture_overrides) {
        const auto eq = o.find('=');
        if (eq == std::string::npos) {
            throw UsageError("fixture override '" + o + "' is not NAME=ANF");
        }
        const std::string name = o.substr(0, eq);
        auto it = std::find_if(config.fixtures.begin(), config.fixtures.end(),
                               [&](const verify::Representative& r) { return r.id == name; });
        if (it == config.fixtures.end()) {
            throw UsageError("unknown fixture '" + name + "'");
        }
        try {
            it->anf = parse_anf(o.substr(eq + 1), 6);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    if (c.trials < 1) {
        throw UsageError("--trials must be at least 1");
    }
    if (c.budget < 1) {
        throw UsageError("--budget must be at least 1");
    }
    return config;
}

} // namespace detail

/// Executes one command. Returns 0 on success or pass, 1 when a verification
/// fails (or no witness is found), 2 on usage errors.
inline int run(const Command& c, std::ostream& out, std::ostream& err)
{
    using detail::emit;
    using detail::envelope;
    try {
        const unsigned threads = std::max(1U, c.threads);
        if (c.verb == "explain-layout") {
            const int n = c.n == 0 ? 6 : c.n;
            if (n < kMinVars || n > kMaxVars) {
                throw UsageError("n=" + std::to_string(n) + " out of range");
            }
            if (!c.json) {
                out << explain_layout(n);
                return kExitOk;
            }
            auto j = envelope(c.verb);
            j["n"] = n;
            auto& bits = j["bits"] = detail::Json::array();
            for (int b = 0; b < pair_count(n); ++b) {
                const auto [i, k] = bit_pair(n, b);
                bits.push_back({{"bit", b},
                                {"mask", format_quadratic_hex(QuadraticForm(n, 1U << b))},
                                {"pair", std::to_string(i + 1) + std::to_string(k + 1)}});
            }
            emit(out, j);
            return kExitOk;
        }
        if (c.verb == "bounds") {
            const auto table = verify::propagate_bounds(verify::kCoveringRadius27);
            if (!c.json) {
                out << "n     lower  upper\n";
                for (const auto& r : table.rows) {
                    out << r.n << (r.n < 10 ? "     " : "    ") << r.lower << std::string(7 - std::to_string(r.lower).size(), ' ')
                        << r.upper << (r.propagated ? "  (propagated)" : "") << "\n";
                }
                return kExitOk;
            }
            auto j = envelope(c.verb);
            j["covering_radius_rm27"] = verify::kCoveringRadius27;
            auto& rows = j["rows"] = detail::Json::array();
            for (const auto& r : table.rows) {
                rows.push_back({{"n", r.n}, {"lower", r.lower}, {"upper", r.upper}, {"propagated", r.propagated}});
            }
            auto& rm1 = j["rm1_bounds"] = detail::Json::object();
            for (const auto& [n, b] : table.rm1_bounds) {
                rm1[std::to_string(n)] = b;
            }
            emit(out, j);
            return kExitOk;
        }
        if (c.verb == "verify") {
            const auto report = verify::run_full_verification(detail::verify_config(c));
            if (c.json) {
                out << verify::to_json(report, c.timing).dump(2) << "\n";
            } else {
                out << verify::render_text(report, c.timing);
            }
            return report.verdict() ? kExitOk : kExitCheckFailed;
        }
        if (c.verb == "witness") {
            if (c.budget < 1) {
                throw UsageError("--budget must be at least 1");
            }
            const auto w = verify::search_witness(c.budget, c.seed);
            if (c.json) {
                auto j = envelope(c.verb);
                j["found"] = w.found;
                j["nl2"] = w.nl2;
                j["candidates"] = w.candidates;
                j["index"] = w.index;
                j["origin"] = w.origin;
                j["function"] = w.function ? detail::function_json(*w.function) : detail::Json(nullptr);
                emit(out, j);
            } else {
                out << (w.found ? "witness found" : "not found (budget exhausted)") << ": nl2 = " << w.nl2
                    << " after " << w.candidates << " candidates\n";
                if (w.function) {
                    out << "origin " << w.origin << "\nanf " << format_anf(to_anf(*w.function)) << "\nhex "
                        << format_hex(*w.function) << "\n";
                }
            }
            return w.found ? kExitOk : kExitCheckFailed;
        }

        const TruthTable f = parse_function(c.input, c.format, c.n);
        auto j = envelope(c.verb);
        j["function"] = detail::function_json(f);
        if (c.verb == "nl" || c.verb == "nl2") {
            const int v = c.verb == "nl" ? nonlinearity(f) : nl2(f, threads);
            if (!c.json) {
                out << v << "\n";
                return kExitOk;
            }
            j["value"] = v;
        } else if (c.verb == "anf") {
            const AnfTermSet anf = to_anf(f);
            if (!c.json) {
                out << format_anf(anf) << "\n";
                return kExitOk;
            }
            j["degree"] = anf.degree();
            j["weight"] = f.weight();
        } else if (c.verb == "spectrum") {
            const WalshSpectrum s = fwht(f);
            if (!c.json) {
                for (std::size_t a = 0; a < s.values.size(); ++a) {
                    out << (a ? " " : "") << s.values[a];
                }
                out << "\n";
                return kExitOk;
            }
            j["walsh"] = s.values;
            j["nonlinearity"] = nonlinearity(f);
        } else if (c.verb == "nfh") {
            const NFhSpectrum s = nfh_spectrum(f, threads);
            if (!c.json) {
                for (std::size_t r = 0; r < s.counts.size(); ++r) {
                    if (s.counts[r]) {
                        out << r << " " << s.counts[r] << "\n";
                    }
                }
                return kExitOk;
            }
            auto& h = j["histogram"] = detail::Json::object();
            for (std::size_t r = 0; r < s.counts.size(); ++r) {
                if (s.counts[r]) {
                    h[std::to_string(r)] = s.counts[r];
                }
            }
            j["total"] = s.total();
        } else if (c.verb == "fh" || c.verb == "s16") {
            const int r = detail::require_r(c);
            if (f.vars() != 6) {
                throw UsageError(c.verb + " needs a 6-variable function");
            }
            const FhSet s = fh_set(f, r, threads);
            if (c.verb == "s16") {
                const int count = s16_count(s);
                if (!c.json) {
                    out << count << "\n";
                    return kExitOk;
                }
                j["r"] = r;
                j["fh_count"] = s.members.size();
                j["s16_count"] = count;
            } else {
                if (!c.json) {
                    for (const auto& q : s.members) {
                        out << format_quadratic(q) << " " << format_quadratic_hex(q) << "\n";
                    }
                    return kExitOk;
                }
                j["r"] = r;
                j["count"] = s.members.size();
                auto& m = j["members"] = detail::Json::array();
                for (const auto& q : s.members) {
                    m.push_back({{"pairs", format_quadratic(q)}, {"mask", format_quadratic_hex(q)}});
                }
            }
        } else {
            throw UsageError("unknown verb '" + c.verb + "'");
        }
        emit(out, j);
        return kExitOk;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

} // namespace rmcov::cli
