#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace rmcov::verify {

inline constexpr const char* kReportSchemaVersion = "rmcov.report/1";

enum class Relation { eq, lt, le, gt, ge };

inline const char* relation_symbol(Relation r)
{
    switch (r) {
    case Relation::eq: return "==";
    case Relation::lt: return "<";
    case Relation::le: return "<=";
    case Relation::gt: return ">";
    case Relation::ge: return ">=";
    }
    return "?";
}

inline Relation relation_from_symbol(const std::string& s)
{
    for (Relation r : {Relation::eq, Relation::lt, Relation::le, Relation::gt, Relation::ge}) {
        if (s == relation_symbol(r)) {
            return r;
        }
    }
    throw std::invalid_argument("unknown relation '" + s + "'");
}

inline bool holds(Relation r, std::int64_t computed, std::int64_t expected)
{
    switch (r) {
    case Relation::eq: return computed == expected;
    case Relation::lt: return computed < expected;
    case Relation::le: return computed <= expected;
    case Relation::gt: return computed > expected;
    case Relation::ge: return computed >= expected;
    }
    return false;
}

/// One verified claim. `universe` > 0 marks a universally quantified check
/// ("for every member of a set of that size"); `computed` then holds the
/// first offending value, or the common value when all members agree.
struct CheckResult {
    std::string check_id;
    Relation relation = Relation::eq;
    std::int64_t expected = 0;
    std::int64_t computed = 0;
    std::int64_t universe = 0;
    bool pass = false;
    double elapsed_ms = 0.0;
    std::string claim;
    std::string detail;

    [[nodiscard]] std::string expected_text() const
    {
        std::string s = std::string(relation_symbol(relation)) + " " + std::to_string(expected);
        if (universe > 0) {
            s = "forall " + std::to_string(universe) + ": " + s;
        }
        return s;
    }

    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct VerificationReport {
    std::vector<CheckResult> results;
    std::vector<std::string> assumptions;
    std::vector<std::string> notes;
    std::string structure;

    [[nodiscard]] bool verdict() const
    {
        return !results.empty() &&
               std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
    }

    [[nodiscard]] std::vector<std::string> failing() const
    {
        std::vector<std::string> ids;
        for (const auto& r : results) {
            if (!r.pass) {
                ids.push_back(r.check_id);
            }
        }
        return ids;
    }

    [[nodiscard]] const CheckResult* find(const std::string& id) const
    {
        for (const auto& r : results) {
            if (r.check_id == id) {
                return &r;
            }
        }
        return nullptr;
    }

    void sort()
    {
        std::stable_sort(results.begin(), results.end(),
                         [](const CheckResult& a, const CheckResult& b) { return a.check_id < b.check_id; });
    }

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// With include_timing = false every elapsed_ms is written as 0, which makes
/// reports from identical configurations byte-identical.
inline nlohmann::ordered_json to_json(const VerificationReport& report, bool include_timing = true)
{
    nlohmann::ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["verb"] = "verify";
    j["verdict"] = report.verdict() ? "pass" : "fail";
    j["failing"] = report.failing();
    j["structure"] = report.structure;
    j["assumptions"] = report.assumptions;
    j["notes"] = report.notes;
    auto& arr = j["results"] = nlohmann::ordered_json::array();
    for (const auto& r : report.results) {
        nlohmann::ordered_json c;
        c["check_id"] = r.check_id;
        c["expected"] = r.expected_text();
        c["relation"] = relation_symbol(r.relation);
        c["expected_value"] = r.expected;
        c["computed"] = r.computed;
        c["universe"] = r.universe;
        c["status"] = r.pass ? "pass" : "fail";
        c["elapsed_ms"] = include_timing ? r.elapsed_ms : 0.0;
        c["paper_ref"] = r.claim;
        c["detail"] = r.detail;
        arr.push_back(std::move(c));
    }
    return j;
}

inline VerificationReport report_from_json(const nlohmann::json& j)
{
    if (j.at("schema_version").get<std::string>() != kReportSchemaVersion) {
        throw std::invalid_argument("unsupported report schema " + j.at("schema_version").get<std::string>());
    }
    VerificationReport report;
    report.structure = j.at("structure").get<std::string>();
    report.assumptions = j.at("assumptions").get<std::vector<std::string>>();
    report.notes = j.at("notes").get<std::vector<std::string>>();
    for (const auto& c : j.at("results")) {
        CheckResult r;
        r.check_id = c.at("check_id").get<std::string>();
        r.relation = relation_from_symbol(c.at("relation").get<std::string>());
        r.expected = c.at("expected_value").get<std::int64_t>();
        r.computed = c.at("computed").get<std::int64_t>();
        r.universe = c.at("universe").get<std::int64_t>();
        r.pass = c.at("status").get<std::string>() == "pass";
        r.elapsed_ms = c.at("elapsed_ms").get<double>();
        r.claim = c.at("paper_ref").get<std::string>();
        r.detail = c.at("detail").get<std::string>();
        report.results.push_back(std::move(r));
    }
    return report;
}

inline std::string render_text(const VerificationReport& report, bool include_timing = true)
{
    std::ostringstream out;
    for (const auto& r : report.results) {
        out << (r.pass ? "PASS " : "FAIL ") << r.check_id << "  computed " << r.computed << ", expected "
            << r.expected_text();
        if (include_timing) {
            out << "  (" << static_cast<std::int64_t>(r.elapsed_ms + 0.5) << " ms)";
        }
        out << "\n";
        if (!r.detail.empty()) {
            out << "     " << r.detail << "\n";
        }
    }
    out << "\nassumptions (imported, not verified here):\n";
    for (const auto& a : report.assumptions) {
        out << "  - " << a << "\n";
    }
    if (!report.notes.empty()) {
        out << "notes:\n";
        for (const auto& n : report.notes) {
            out << "  - " << n << "\n";
        }
    }
    out << "structure: " << report.structure << "\n";
    const auto failing = report.failing();
    out << "verdict: " << (report.verdict() ? "PASS" : "FAIL");
    if (!failing.empty()) {
        out << " (" << failing.size() << " failing:";
        for (const auto& id : failing) {
            out << " " << id;
        }
        out << ")";
    }
    out << "\n";
    return out.str();
}

} // namespace rmcov::verify
