#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "rmcov/core.hpp"
#include "rmcov/secondorder.hpp"
#include "rmcov/verify/bounds.hpp"
#include "rmcov/verify/report.hpp"
#include "rmcov/verify/representatives.hpp"
#include "rmcov/verify/witness.hpp"

namespace rmcov::verify {

/// Expected constant for every check that compares against a fixed value.
inline std::map<std::string, std::int64_t> default_expectations()
{
    std::map<std::string, std::int64_t> e = {
        {"preamble.g0.nl2", 18},
        {"preamble.g0.max_coset_nl", 22},
        {"preamble.g0.min_coset_nl", 18},

        {"nfh.fun1.r16", 448}, {"nfh.fun1.r26", 0}, {"nfh.fun1.r28", 64},
        {"nfh.fun2.r16", 384}, {"nfh.fun2.r26", 1024}, {"nfh.fun2.r28", 0},
        {"nfh.fun3.r16", 64}, {"nfh.fun3.tail26", 0},
        {"nfh.fun4.r16", 224}, {"nfh.fun4.r26", 512}, {"nfh.fun4.r28", 0},
        {"nfh.fun5.r16", 272}, {"nfh.fun5.tail26", 0},
        {"nfh.fun6.r15", 112}, {"nfh.fun6.r25", 0}, {"nfh.fun6.r27", 64},
        {"nfh.fun7.r15", 96}, {"nfh.fun7.r25", 1024}, {"nfh.fun7.r27", 0},
        {"nfh.fun8.r15", 16}, {"nfh.fun8.tail25", 0},
        {"nfh.fun9.r15", 72}, {"nfh.fun9.r25", 512}, {"nfh.fun9.r27", 0},
        {"nfh.fun10.r15", 72}, {"nfh.fun10.r25", 256}, {"nfh.fun10.r27", 0},
        {"nfh.fun11.r15", 40}, {"nfh.fun11.r25", 544}, {"nfh.fun11.r27", 0},
        {"nfh.fun12.r15", 66}, {"nfh.fun12.r25", 414}, {"nfh.fun12.r27", 0},

        {"s16.fun2.r16", 47}, {"s16.fun4.r16", 43},
        {"s16.shift.fun1.r28", 7}, {"s16.shift.fun2.r26", 55}, {"s16.shift.fun4.r26", 21},
        {"s16.fun7.r15", 23}, {"s16.fun9.r15", 15}, {"s16.fun10.r15", 24}, {"s16.fun11.r15", 21},
        {"s16.fun12.r15", 17},
        {"s16.shift.fun7.r25", 55}, {"s16.shift.fun9.r25", 21}, {"s16.shift.fun10.r25", 13},
        {"s16.shift.fun11.r25", 30}, {"s16.shift.fun12.r25", 30},

        {"proof.nl15.candidates", 1 << 6},
        {"proof.nl15.fun6_margin", 0},
        {"proof.nl16.candidates", (1 << 2) | (1 << 4)},
        {"proof.nl16.case1.margin", 0},
        {"proof.nl16.case2.h_profile", 45},
        {"proof.nl16.case2.k_profile", 22},
        {"proof.nl16.case2.margin", 0},
        {"proof.mixed.candidates.first", (1 << 1) | (1 << 2) | (1 << 4)},
        {"proof.mixed.candidates.second", (1 << 7) | (1 << 9) | (1 << 10) | (1 << 11) | (1 << 12)},
        {"proof.mixed.case1.candidates", 1 << 11},
        {"proof.mixed.case1.margin", 0},
        {"proof.mixed.case2.candidates", 1 << 7},
        {"proof.mixed.case2.k_profile", 22},
        {"proof.mixed.case2.margin", 0},
        {"proof.mixed.case3.candidates", 1 << 7},
        {"proof.mixed.case3.h_profile", 42},
        {"proof.mixed.case3.margin", 0},

        {"supplement.mixed.case2.outlier_margin", 0},
        {"supplement.mixed.case3.outlier_margin", 0},

        {"concat.g0_g0.nl2", 40},
        {"concat.g0_zero.nl2", 18},
        {"concat.g0_affine.nl2", 40},
        {"concat.g0_g0.chain", 40},
        {"concat.g0_zero.chain", 40},
        {"concat.g0_affine.chain", 40},

        {"witness.nl2", kCoveringRadius27},
        {"witness.samples_max", kCoveringRadius27},
        {"witness.subset_violations", 0},

        {"bounds.n8.upper", 96}, {"bounds.n9.upper", 216}, {"bounds.n10.upper", 460},
        {"bounds.n8.lower", 84}, {"bounds.n9.lower", 196}, {"bounds.n10.lower", 400},
        {"bounds.propagation_violations", 0},
    };
    for (int i = 1; i <= 12; ++i) {
        e["nl2.fun" + std::to_string(i)] = i <= 5 ? 16 : 15;
        e["nfh.fun" + std::to_string(i) + ".mass"] = 32768;
    }
    return e;
}

inline const std::vector<std::string>& check_groups()
{
    static const std::vector<std::string> g = {"preamble", "nl2",     "nfh",    "s16",    "proof",
                                               "supplement", "concat", "witness", "bounds"};
    return g;
}

struct Config {
    std::vector<Representative> fixtures = default_representatives();
    std::map<std::string, std::int64_t> expected = default_expectations();
    std::uint64_t seed = 2027;
    int concat_trials = 10;
    std::uint64_t witness_budget = 1'000'000;
    unsigned threads = 1;
    std::set<std::string> groups;  // empty: every group

    [[nodiscard]] bool wants(const std::string& group) const { return groups.empty() || groups.count(group) > 0; }
};

/// Shared per-run state: fixture tables and their coset nl tables, computed once.
class CheckContext {
public:
    explicit CheckContext(const Config& config) : config_(config) {}

    [[nodiscard]] const Config& config() const noexcept { return config_; }

    const TruthTable& table(const std::string& id)
    {
        if (auto it = tables_.find(id); it != tables_.end()) {
            return it->second;
        }
        for (const auto& r : config_.fixtures) {
            if (r.id == id) {
                return tables_.emplace(id, from_anf(r.anf)).first->second;
            }
        }
        throw std::invalid_argument("fixture '" + id + "' missing from configuration");
    }

    const std::vector<std::uint8_t>& cosets(const std::string& id)
    {
        if (auto it = cosets_.find(id); it != cosets_.end()) {
            return it->second;
        }
        return cosets_.emplace(id, coset_nl_table(table(id), config_.threads)).first->second;
    }

    const NFhSpectrum& spectrum(const std::string& id)
    {
        if (auto it = spectra_.find(id); it != spectra_.end()) {
            return it->second;
        }
        NFhSpectrum s{6, std::vector<std::uint64_t>(33, 0)};
        for (std::uint8_t v : cosets(id)) {
            ++s.counts[v];
        }
        return spectra_.emplace(id, std::move(s)).first->second;
    }

    FhSet fh(const std::string& id, int r) { return fh_set_from_table(table(id), r, cosets(id)); }

    /// Memoized nl2 for arbitrary functions.
    int nl2_of(const TruthTable& f)
    {
        const auto key = std::make_tuple(f.vars(), f.words()[0], f.words()[1]);
        if (auto it = nl2_.find(key); it != nl2_.end()) {
            return it->second;
        }
        return nl2_.emplace(key, nl2(f, config_.threads)).first->second;
    }

    std::int64_t expected(const std::string& check_id) const
    {
        auto it = config_.expected.find(check_id);
        if (it == config_.expected.end()) {
            throw std::logic_error("no expected value registered for check '" + check_id + "'");
        }
        return it->second;
    }

private:
    const Config& config_;
    std::map<std::string, TruthTable> tables_;
    std::map<std::string, std::vector<std::uint8_t>> cosets_;
    std::map<std::string, NFhSpectrum> spectra_;
    std::map<std::tuple<int, std::uint64_t, std::uint64_t>, int> nl2_;
};

namespace detail {

using Clock = std::chrono::steady_clock;

inline double ms_since(Clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

inline CheckResult make_result(std::string id, Relation rel, std::int64_t expected, std::int64_t computed,
                               std::string claim, std::string detail, Clock::time_point t0)
{
    CheckResult r;
    r.check_id = std::move(id);
    r.relation = rel;
    r.expected = expected;
    r.computed = computed;
    r.pass = holds(rel, computed, expected);
    r.claim = std::move(claim);
    r.detail = std::move(detail);
    r.elapsed_ms = ms_since(t0);
    return r;
}

// Universal claim over `values`; an empty set fails rather than passing vacuously.
inline CheckResult make_universal(std::string id, Relation rel, std::int64_t expected,
                                  const std::vector<std::int64_t>& values, std::string claim, std::string detail,
                                  Clock::time_point t0)
{
    std::int64_t computed = expected;
    bool pass = !values.empty();
    if (!values.empty()) {
        const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
        computed = (rel == Relation::gt || rel == Relation::ge) ? *mn : *mx;
        if (rel == Relation::eq) {
            computed = *mn != expected ? *mn : *mx;
        }
        for (std::int64_t v : values) {
            if (!holds(rel, v, expected)) {
                computed = v;
                pass = false;
                break;
            }
        }
        detail = "min " + std::to_string(*mn) + ", max " + std::to_string(*mx) +
                 (detail.empty() ? "" : "; " + detail);
    } else {
        detail = "empty set" + (detail.empty() ? "" : "; " + detail);
    }
    CheckResult r;
    r.check_id = std::move(id);
    r.relation = rel;
    r.expected = expected;
    r.computed = computed;
    r.universe = static_cast<std::int64_t>(values.size());
    r.pass = pass;
    r.claim = std::move(claim);
    r.detail = std::move(detail);
    r.elapsed_ms = ms_since(t0);
    return r;
}

inline std::string histogram_text(const std::vector<std::int64_t>& values)
{
    std::map<std::int64_t, std::int64_t> h;
    for (auto v : values) {
        ++h[v];
    }
    std::string s = "distribution";
    for (const auto& [k, c] : h) {
        s += " " + std::to_string(k) + ":" + std::to_string(c);
    }
    return s;
}

inline std::string fun(int i) { return "fun" + std::to_string(i); }

inline std::string mask_text(std::int64_t mask)
{
    std::string s = "{";
    for (int i = 0; i < 63; ++i) {
        if ((mask >> i) & 1) {
            s += (s.size() > 1 ? "," : "") + fun(i);
        }
    }
    return s + "}";
}

} // namespace detail

/// nl2(g0) = 18 and the extremes of nl(g0 + q) over all quadratic forms q.
inline std::vector<CheckResult> check_preamble(CheckContext& ctx)
{
    using namespace detail;
    std::vector<CheckResult> out;
    auto t0 = Clock::now();
    const int v = ctx.nl2_of(ctx.table("g0"));
    out.push_back(make_result("preamble.g0.nl2", Relation::eq, ctx.expected("preamble.g0.nl2"), v, "nl2(g0) = 18",
                              "", t0));
    t0 = Clock::now();
    const auto& t = ctx.cosets("g0");
    const auto [mn, mx] = std::minmax_element(t.begin(), t.end());
    out.push_back(make_result("preamble.g0.max_coset_nl", Relation::eq, ctx.expected("preamble.g0.max_coset_nl"), *mx,
                              "nl(g0 + g1) <= 22 for every quadratic g1, attained",
                              "max over " + std::to_string(t.size()) + " homogeneous forms", t0));
    out.push_back(make_result("preamble.g0.min_coset_nl", Relation::eq, ctx.expected("preamble.g0.min_coset_nl"), *mn,
                              "min over the same enumeration equals nl2(g0)", "", t0));
    return out;
}

inline std::vector<CheckResult> check_representative_nl2(CheckContext& ctx)
{
    using namespace detail;
    std::vector<CheckResult> out;
    for (int i = 1; i <= 12; ++i) {
        const auto t0 = Clock::now();
        const std::string id = "nl2." + fun(i);
        const int v = ctx.nl2_of(ctx.table(fun(i)));
        out.push_back(make_result(id, Relation::eq, ctx.expected(id), v,
                                  "nl2(" + fun(i) + ") = " + (i <= 5 ? "16" : "15"),
                                  "degree " + std::to_string(degree(ctx.table(fun(i)))), t0));
    }
    return out;
}

inline std::vector<CheckResult> check_nfh_values(CheckContext& ctx)
{
    using namespace detail;
    std::vector<CheckResult> out;
    struct Item {
        int fun;
        std::vector<int> points;  // exact NFh values checked
        int tail;                 // 0: none, else NFh(i) = 0 for all i >= tail
    };
    const std::vector<Item> items = {
        {1, {16, 26, 28}, 0}, {2, {16, 26, 28}, 0}, {3, {16}, 26},          {4, {16, 26, 28}, 0},
        {5, {16}, 26},        {6, {15, 25, 27}, 0}, {7, {15, 25, 27}, 0},   {8, {15}, 25},
        {9, {15, 25, 27}, 0}, {10, {15, 25, 27}, 0}, {11, {15, 25, 27}, 0}, {12, {15, 25, 27}, 0},
    };
    for (const auto& item : items) {
        const auto t0 = Clock::now();
        const std::string f = fun(item.fun);
        const NFhSpectrum& s = ctx.spectrum(f);
        for (int r : item.points) {
            const std::string id = "nfh." + f + ".r" + std::to_string(r);
            out.push_back(make_result(id, Relation::eq, ctx.expected(id), static_cast<std::int64_t>(s.at(r)),
                                      "NFh_" + f + "(" + std::to_string(r) + ") = " + std::to_string(ctx.expected(id)),
                                      "", t0));
        }
        if (item.tail > 0) {
            const std::string id = "nfh." + f + ".tail" + std::to_string(item.tail);
            out.push_back(make_result(id, Relation::eq, ctx.expected(id),
                                      static_cast<std::int64_t>(s.tail_from(item.tail)),
                                      "NFh_" + f + "(i) = 0 for every i >= " + std::to_string(item.tail),
                                      "sum of the histogram tail", t0));
        }
        const std::string mass = "nfh." + f + ".mass";
        out.push_back(make_result(mass, Relation::eq, ctx.expected(mass), static_cast<std::int64_t>(s.total()),
                                  "sum_r NFh_" + f + "(r) = 2^15", "", t0));
    }
    return out;
}

/// |(g + Fh_f(r)) ∩ S16| for every g in Fh_f(r).
inline std::vector<std::int64_t> shifted_counts(CheckContext& ctx, const std::string& f, int r)
{
    const FhSet s = ctx.fh(f, r);
    std::vector<std::int64_t> values;
    values.reserve(s.members.size());
    for (const auto& g : s.members) {
        values.push_back(shifted_s16_count(g, s));
    }
    return values;
}

inline std::vector<CheckResult> check_s16_counts(CheckContext& ctx)
{
    using namespace detail;
    std::vector<CheckResult> out;
    const std::vector<std::pair<int, int>> plain = {{2, 16}, {4, 16}, {7, 15}, {9, 15}, {10, 15}, {11, 15}, {12, 15}};
    for (const auto& [i, r] : plain) {
        const auto t0 = Clock::now();
        const std::string id = "s16." + fun(i) + ".r" + std::to_string(r);
        const int v = s16_count(ctx.fh(fun(i), r));
        out.push_back(make_result(id, Relation::eq, ctx.expected(id), v,
                                  "|Fh_" + fun(i) + "(" + std::to_string(r) + ") ∩ S16| = " +
                                      std::to_string(ctx.expected(id)),
                                  "", t0));
    }
    struct Shifted {
        int fun;
        int r;
        Relation rel;
    };
    const std::vector<Shifted> shifted = {
        {1, 28, Relation::eq},  {2, 26, Relation::eq},  {4, 26, Relation::eq},  {7, 25, Relation::eq},
        {9, 25, Relation::eq},  {10, 25, Relation::eq}, {11, 25, Relation::lt}, {12, 25, Relation::lt},
    };
    for (const auto& s : shifted) {
        const auto t0 = Clock::now();
        const std::string id = "s16.shift." + fun(s.fun) + ".r" + std::to_string(s.r);
        const auto values = shifted_counts(ctx, fun(s.fun), s.r);
        const std::string set = "Fh_" + fun(s.fun) + "(" + std::to_string(s.r) + ")";
        out.push_back(make_universal(id, s.rel, ctx.expected(id), values,
                                     "|(g + " + set + ") ∩ S16| " + relation_symbol(s.rel) + " " +
                                         std::to_string(ctx.expected(id)) + " for every g in " + set,
                                     s.rel == Relation::lt ? histogram_text(values) : "", t0));
    }
    return out;
}

namespace detail {

inline std::vector<QuadraticForm> s16_part(CheckContext& ctx, const std::string& f, int r)
{
    return s16_members(ctx.fh(f, r).members);
}

// Pair profiles of (g + Fh_f(r)) ∩ S16 at threshold t, for every g in Fh_f(r).
inline std::vector<std::int64_t> k_profiles(CheckContext& ctx, const std::string& f, int r, int t)
{
    const FhSet s = ctx.fh(f, r);
    std::vector<std::int64_t> values;
    values.reserve(s.members.size());
    for (const auto& g : s.members) {
        values.push_back(shifted_pair_profile(g, s.members, t));
    }
    return values;
}

inline std::int64_t max_of(const std::vector<std::int64_t>& v)
{
    return v.empty() ? 0 : *std::max_element(v.begin(), v.end());
}

inline std::string range_text(const std::vector<std::int64_t>& v)
{
    if (v.empty()) {
        return "empty";
    }
    const auto [mn, mx] = std::minmax_element(v.begin(), v.end());
    return *mn == *mx ? std::to_string(*mn) : std::to_string(*mn) + ".." + std::to_string(*mx);
}

} // namespace detail

/// Proof-internal counts and the inequalities the case analysis consumes.
inline std::vector<CheckResult> check_pair_profiles(CheckContext& ctx)
{
    using namespace detail;
    std::vector<CheckResult> out;
    auto nfh = [&](int i, int r) { return static_cast<std::int64_t>(ctx.spectrum(fun(i)).at(r)); };
    auto tail = [&](int i, int r) { return static_cast<std::int64_t>(ctx.spectrum(fun(i)).tail_from(r)); };

    // both halves with nl2 = 15: Fh_fi(15) ⊆ ∪_{m >= 26} Fh_fj(m)
    {
        auto t0 = Clock::now();
        std::int64_t mask = 0;
        for (int j = 6; j <= 12; ++j) {
            if (tail(j, 26) > 0) {
                mask |= std::int64_t{1} << j;
            }
        }
        out.push_back(make_result("proof.nl15.candidates", Relation::eq, ctx.expected("proof.nl15.candidates"), mask,
                                  "only fun6 among the nl2 = 15 fixtures has a nonempty Fh tail from 26",
                                  "surviving " + mask_text(mask), t0));
        t0 = Clock::now();
        out.push_back(make_result("proof.nl15.fun6_margin", Relation::gt, ctx.expected("proof.nl15.fun6_margin"),
                                  nfh(6, 15) - tail(6, 26), "NFh_fun6(27) = 64 < NFh_fun6(15) = 112",
                                  "NFh_fun6(15) = " + std::to_string(nfh(6, 15)) +
                                      ", tail from 26 = " + std::to_string(tail(6, 26)),
                                  t0));
    }

    const auto h2 = s16_part(ctx, "fun2", 16);
    const auto h4 = s16_part(ctx, "fun4", 16);
    const std::int64_t h2_t13 = pair_profile(h2, 13);
    const std::int64_t h2_t12 = pair_profile(h2, 12);
    const std::int64_t h4_t12 = pair_profile(h4, 12);
    const std::int64_t h4_t13 = pair_profile(h4, 13);

    // both halves with nl2 = 16
    {
        auto t0 = Clock::now();
        std::int64_t mask = 0;
        std::string pairs;
        for (int i = 1; i <= 5; ++i) {
            for (int j = 1; j <= 5; ++j) {
                if (tail(j, 26) >= nfh(i, 16) && tail(i, 26) >= nfh(j, 16)) {
                    mask |= (std::int64_t{1} << i) | (std::int64_t{1} << j);
                    pairs += " (" + fun(i) + "," + fun(j) + ")";
                }
            }
        }
        out.push_back(make_result("proof.nl16.candidates", Relation::eq, ctx.expected("proof.nl16.candidates"), mask,
                                  "Fh_fi(16) ⊆ ∪_{m>=26} Fh_fj(m) leaves only fun2 and fun4",
                                  "surviving pairs" + pairs, t0));

        t0 = Clock::now();
        const auto shift4 = shifted_counts(ctx, "fun4", 26);
        const std::int64_t smallest_h = std::min<std::int64_t>(s16_count(ctx.fh("fun2", 16)), s16_count(ctx.fh("fun4", 16)));
        out.push_back(make_result("proof.nl16.case1.margin", Relation::gt, ctx.expected("proof.nl16.case1.margin"),
                                  smallest_h - max_of(shift4),
                                  "43 or 47 S16 members cannot fit in (g + Fh_fun4(26)) ∩ S16 of size 21",
                                  "min(|Fh_fun2(16) ∩ S16|, |Fh_fun4(16) ∩ S16|) = " + std::to_string(smallest_h) +
                                      ", max shifted fun4 count = " + std::to_string(max_of(shift4)),
                                  t0));

        t0 = Clock::now();
        out.push_back(make_result("proof.nl16.case2.h_profile", Relation::eq, ctx.expected("proof.nl16.case2.h_profile"),
                                  h2_t13, "|{h in H : |(h + H) ∩ S16| >= 13}| = 45, H = Fh_fun2(16) ∩ S16",
                                  "|H| = " + std::to_string(h2.size()) + "; threshold 12 gives " +
                                      std::to_string(h2_t12),
                                  t0));

        t0 = Clock::now();
        const auto k13 = k_profiles(ctx, "fun2", 26, 13);
        const auto k12 = k_profiles(ctx, "fun2", 26, 12);
        out.push_back(make_universal("proof.nl16.case2.k_profile", Relation::eq,
                                    ctx.expected("proof.nl16.case2.k_profile"), k13,
                                    "|{k in K : |(k + K) ∩ S16| >= 13}| = 22, K = (g + Fh_fun2(26)) ∩ S16, every g",
                                    "threshold 12 gives " + range_text(k12), t0));
        t0 = Clock::now();
        out.push_back(make_result("proof.nl16.case2.margin", Relation::gt, ctx.expected("proof.nl16.case2.margin"),
                                  h2_t13 - max_of(k13), "h-profile 45 exceeds k-profile 22 at threshold 13",
                                  std::to_string(h2_t13) + " vs " + std::to_string(max_of(k13)), t0));
    }

    // f1 with nl2 = 16, f2 with nl2 = 15
    std::map<int, std::vector<int>> partners;  // i1 -> surviving i2
    {
        auto t0 = Clock::now();
        std::int64_t first = 0;
        std::int64_t second = 0;
        for (int i1 = 1; i1 <= 5; ++i1) {
            for (int i2 = 6; i2 <= 12; ++i2) {
                if (tail(i2, 25) >= nfh(i1, 16) && tail(i1, 26) >= nfh(i2, 15)) {
                    first |= std::int64_t{1} << i1;
                    second |= std::int64_t{1} << i2;
                    partners[i1].push_back(i2);
                }
            }
        }
        out.push_back(make_result("proof.mixed.candidates.first", Relation::eq,
                                  ctx.expected("proof.mixed.candidates.first"), first,
                                  "the nl2 = 16 half is fun1, fun2 or fun4", "surviving " + mask_text(first), t0));
        out.push_back(make_result("proof.mixed.candidates.second", Relation::eq,
                                  ctx.expected("proof.mixed.candidates.second"), second,
                                  "the nl2 = 15 half is fun7, fun9, fun10, fun11 or fun12",
                                  "surviving " + mask_text(second), t0));
    }

    std::map<int, std::vector<std::int64_t>> shifted25;
    for (int i2 : {7, 9, 10, 11, 12}) {
        shifted25[i2] = shifted_counts(ctx, fun(i2), 25);
    }

    // case 1: f1 ~ fun1
    {
        auto t0 = Clock::now();
        std::int64_t mask = 0;
        for (int i2 : partners[1]) {
            mask |= std::int64_t{1} << i2;
        }
        out.push_back(make_result("proof.mixed.case1.candidates", Relation::eq,
                                  ctx.expected("proof.mixed.case1.candidates"), mask,
                                  "NFh_fun1(28) = 64 >= NFh_fi2(15) forces fun11", "surviving " + mask_text(mask), t0));
        t0 = Clock::now();
        const auto shift1 = shifted_counts(ctx, "fun1", 28);
        const std::int64_t s11 = s16_count(ctx.fh("fun11", 15));
        out.push_back(make_result("proof.mixed.case1.margin", Relation::gt, ctx.expected("proof.mixed.case1.margin"),
                                  s11 - max_of(shift1), "|Fh_fun11(15) ∩ S16| = 21 > 7 = |(g + Fh_fun1(28)) ∩ S16|",
                                  std::to_string(s11) + " vs " + std::to_string(max_of(shift1)), t0));
    }

    // cases 2 and 3: f1 ~ fun2 or fun4; (g + Fh_fi2(25)) ∩ S16 must hold all of H
    const auto k7_12 = k_profiles(ctx, "fun7", 25, 12);
    const auto k7_13 = k_profiles(ctx, "fun7", 25, 13);
    for (const auto& [case_no, i1, h_size] :
         std::vector<std::tuple<int, int, std::int64_t>>{{2, 2, static_cast<std::int64_t>(h2.size())},
                                                         {3, 4, static_cast<std::int64_t>(h4.size())}}) {
        const std::string prefix = "proof.mixed.case" + std::to_string(case_no);
        auto t0 = Clock::now();
        std::int64_t mask = 0;
        std::int64_t pool = 0;
        for (int i2 : partners[i1]) {
            pool |= std::int64_t{1} << i2;
            if (max_of(shifted25[i2]) >= h_size) {
                mask |= std::int64_t{1} << i2;
            }
        }
        out.push_back(make_result(prefix + ".candidates", Relation::eq, ctx.expected(prefix + ".candidates"), mask,
                                  "|(g + Fh_fi2(25)) ∩ S16| >= " + std::to_string(h_size) + " for some g forces fun7",
                                  "surviving " + mask_text(mask) + " among " + mask_text(pool),
                                  t0));
    }
    {
        auto t0 = Clock::now();
        out.push_back(make_universal("proof.mixed.case2.k_profile", Relation::eq,
                                     ctx.expected("proof.mixed.case2.k_profile"), k7_12,
                                     "|{k in K : |(k + K) ∩ S16| >= 12}| = 22, K = (g + Fh_fun7(25)) ∩ S16, every g",
                                     "threshold 13 gives " + range_text(k7_13), t0));
        t0 = Clock::now();
        out.push_back(make_result("proof.mixed.case2.margin", Relation::gt, ctx.expected("proof.mixed.case2.margin"),
                                  h2_t13 - max_of(k7_12), "h-profile 45 (threshold 13) exceeds k-profile 22 (threshold 12)",
                                  std::to_string(h2_t13) + " vs " + std::to_string(max_of(k7_12)), t0));
        t0 = Clock::now();
        out.push_back(make_result("proof.mixed.case3.h_profile", Relation::eq, ctx.expected("proof.mixed.case3.h_profile"),
                                  h4_t12, "|{h in H : |(h + H) ∩ S16| >= 12}| = 42, H = Fh_fun4(16) ∩ S16",
                                  "|H| = " + std::to_string(h4.size()) + "; threshold 13 gives " +
                                      std::to_string(h4_t13),
                                  t0));
        t0 = Clock::now();
        out.push_back(make_result("proof.mixed.case3.margin", Relation::gt, ctx.expected("proof.mixed.case3.margin"),
                                  h4_t12 - max_of(k7_12), "h-profile 42 exceeds k-profile 22 at threshold 12",
                                  std::to_string(h4_t12) + " vs " + std::to_string(max_of(k7_12)), t0));
    }
    return out;
}

/// Closes the mixed cases for any fi2 other than fun7 whose shifted S16 set is
/// large enough to hold H: the pair profile of that set must stay below H's.
inline std::vector<CheckResult> check_supplement(CheckContext& ctx)
{
    using namespace detail;
    std::vector<CheckResult> out;
    const auto h2 = s16_part(ctx, "fun2", 16);
    const auto h4 = s16_part(ctx, "fun4", 16);
    for (const auto& [case_no, h, t] : std::vector<std::tuple<int, const std::vector<QuadraticForm>*, int>>{
             {2, &h2, 13}, {3, &h4, 12}}) {
        const auto t0 = Clock::now();
        const std::int64_t h_profile = pair_profile(*h, t);
        std::int64_t worst = 0;
        std::string outliers;
        for (int i2 : {9, 10, 11, 12}) {
            const FhSet s = ctx.fh(fun(i2), 25);
            for (const auto& g : s.members) {
                if (shifted_s16_count(g, s) >= static_cast<int>(h->size())) {
                    const std::int64_t k = shifted_pair_profile(g, s.members, t);
                    worst = std::max(worst, k);
                    outliers += " " + fun(i2) + "/" + format_quadratic_hex(g) + ":" + std::to_string(k);
                }
            }
        }
        const std::string id = "supplement.mixed.case" + std::to_string(case_no) + ".outlier_margin";
        out.push_back(make_result(id, Relation::gt, ctx.expected(id), h_profile - worst,
                                  "every g with |(g + Fh_fi2(25)) ∩ S16| >= |H| (fi2 != fun7) has a k-profile below "
                                  "H's at threshold " + std::to_string(t),
                                  "H profile " + std::to_string(h_profile) + "; outliers (fixture/g:k-profile)" +
                                      (outliers.empty() ? " none" : outliers),
                                  t0));
    }
    return out;
}

namespace detail {

inline TruthTable random_function6(std::mt19937_64& rng)
{
    return TruthTable(6, {rng(), 0});
}

inline int first_minimizer(const std::vector<std::uint8_t>& cosets)
{
    return static_cast<int>(std::min_element(cosets.begin(), cosets.end()) - cosets.begin());
}

} // namespace detail

/// nl2(f1 || f2) <= min_q [nl(f1+q) + nl(f2+q)] on random pairs (full n = 7
/// enumeration on the left), and the g0-based chain bound <= 18 + 22.
inline std::vector<CheckResult> check_concat_bound_samples(CheckContext& ctx, int trials, std::uint64_t seed)
{
    using namespace detail;
    if (trials < 1) {
        throw std::invalid_argument("concat bound sampling needs at least one trial");
    }
    std::vector<CheckResult> out;
    const unsigned threads = ctx.config().threads;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < trials; ++i) {
        const auto t0 = Clock::now();
        const TruthTable f1 = random_function6(rng);
        const TruthTable f2 = random_function6(rng);
        const int bound = concat_nl2_upper_bound(f1, f2, threads);
        const int exact = ctx.nl2_of(concat(f1, f2));
        char id[32];
        std::snprintf(id, sizeof id, "concat.random.%02d", i);
        out.push_back(make_result(id, Relation::le, bound, exact, "nl2(f1 || f2) <= min_q [nl(f1+q) + nl(f2+q)]",
                                  "f1 = " + format_hex(f1) + ", f2 = " + format_hex(f2), t0));
    }

    const TruthTable g0 = ctx.table("g0");
    const AffineMap m = random_affine(6, rng());
    const QuadraticForm offset(6, static_cast<std::uint32_t>(rng() & 0x7FFF));
    const std::vector<std::pair<std::string, TruthTable>> constructions = {
        {"g0_g0", g0},
        {"g0_zero", TruthTable(6)},
        {"g0_affine", apply_affine(g0, m) ^ quad_table(offset)},
    };
    for (const auto& [name, f2] : constructions) {
        auto t0 = Clock::now();
        const std::string base = "concat." + name;
        const int exact = ctx.nl2_of(concat(g0, f2));
        out.push_back(make_result(base + ".nl2", Relation::le, ctx.expected(base + ".nl2"), exact,
                                  "nl2(g0 || f2) <= " + std::to_string(ctx.expected(base + ".nl2")),
                                  "full enumeration over 2^21 cosets", t0));

        // d(f2, q2) + nl(g0 + q2) with q2 nearest to f2, and the mirrored pairing
        t0 = Clock::now();
        const auto& c1 = ctx.cosets("g0");
        const auto c2 = coset_nl_table(f2, threads);
        const int q1 = first_minimizer(c1);
        const int q2 = first_minimizer(c2);
        const int forward = c2[q2] + c1[q2];
        const int mirrored = c1[q1] + c2[q1];
        const int chain = std::min(forward, mirrored);
        out.push_back(make_result(base + ".chain", Relation::le, ctx.expected(base + ".chain"), chain,
                                  "nl2(f) <= d(f2, g2) + nl(f1 + g2) <= 18 + 22",
                                  "nl2(f2) + nl(g0 + q2) = " + std::to_string(forward) +
                                      ", nl2(g0) + nl(f2 + q1) = " + std::to_string(mirrored),
                                  t0));
        out.push_back(make_result(base + ".nl2_le_chain", Relation::le, chain, exact,
                                  "nl2(f) is at most the chain bound", "", t0));
    }
    return out;
}

/// Violations of Fh_fi(k) ⊆ ∪_{m >= N-k} Fh_fj(m) for f = f1 || f2 with nl2(f) = N,
/// both orderings, all k.
inline std::int64_t concat_subset_violations(const TruthTable& f, int n_value, unsigned threads = 1)
{
    const auto a = coset_nl_table(restrict_top(f, false), threads);
    const auto b = coset_nl_table(restrict_top(f, true), threads);
    std::int64_t violations = 0;
    for (std::size_t q = 0; q < a.size(); ++q) {
        if (b[q] < n_value - a[q]) {
            ++violations;
        }
        if (a[q] < n_value - b[q]) {
            ++violations;
        }
    }
    return violations;
}

inline std::vector<CheckResult> check_witness(CheckContext& ctx, std::uint64_t budget, std::uint64_t seed)
{
    using namespace detail;
    std::vector<CheckResult> out;
    // elapsed_ms of witness.nl2 covers the search and the certifying enumeration
    auto t0 = Clock::now();
    const WitnessResult w = search_witness(budget, seed, ctx.config().fixtures);

    // Fresh 2^21-coset enumeration, independent of the split evaluation used by the search.
    std::int64_t certified = -1;
    std::string detail = "no candidate";
    if (w.function) {
        certified = ctx.nl2_of(*w.function);
        const AnfTermSet anf = to_anf(*w.function);
        detail = std::string(w.found ? "witness" : "best candidate (budget exhausted)") + " #" +
                 std::to_string(w.index) + " " + w.origin + "; anf " + format_anf(anf) + "; hex " +
                 format_hex(*w.function) + "; degree " + std::to_string(anf.degree()) + "; search value " +
                 std::to_string(w.nl2);
    }
    out.push_back(make_result("witness.nl2", Relation::eq, ctx.expected("witness.nl2"), certified,
                              "some f in B7 has nl2(f) = 40 (lower bound)", detail, t0));
    out.push_back(make_result("witness.samples_max", Relation::le, ctx.expected("witness.samples_max"),
                              w.max_sample_nl2, "nl2(f) <= 40 on every search sample",
                              std::to_string(w.candidates) + " candidates evaluated", t0));
    t0 = Clock::now();
    const std::int64_t violations =
        w.function ? concat_subset_violations(*w.function, static_cast<int>(certified), ctx.config().threads) : -1;
    out.push_back(make_result("witness.subset_violations", Relation::eq, ctx.expected("witness.subset_violations"),
                              violations, "Fh_fi(k) ⊆ ∪_{m >= N-k} Fh_fj(m) on the witness halves, N = nl2",
                              "checked for every quadratic form in both orderings", t0));
    return out;
}

inline std::vector<CheckResult> check_bounds(CheckContext& ctx)
{
    using namespace detail;
    std::vector<CheckResult> out;
    const auto t0 = Clock::now();
    const BoundTable t = propagate_bounds(kCoveringRadius27);
    for (int n = 8; n <= 10; ++n) {
        const BoundRow& r = t.row(n);
        const std::string base = "bounds.n" + std::to_string(n);
        out.push_back(make_result(base + ".upper", Relation::eq, ctx.expected(base + ".upper"), r.upper,
                                  "covering radius of RM(2," + std::to_string(n) + ") <= " +
                                      std::to_string(ctx.expected(base + ".upper")),
                                  "propagated from n=" + std::to_string(n - 1), t0));
        out.push_back(make_result(base + ".lower", Relation::eq, ctx.expected(base + ".lower"), r.lower,
                                  "known lower bound " + std::to_string(ctx.expected(base + ".lower")),
                                  "published value, echoed", t0));
    }
    std::int64_t violations = 0;
    for (std::size_t i = 1; i < t.rows.size(); ++i) {
        const auto it = t.rm1_bounds.find(t.rows[i - 1].n);
        if (it != t.rm1_bounds.end() && t.rows[i].upper > t.rows[i - 1].upper + it->second) {
            ++violations;
        }
    }
    if (t.rows.front().upper > kCoveringRadius27 + t.rm1_bounds.at(7)) {
        ++violations;
    }
    out.push_back(make_result("bounds.propagation_violations", Relation::eq,
                              ctx.expected("bounds.propagation_violations"), violations,
                              "upper(n+1) <= upper(n) + rm1(n)", "", t0));
    return out;
}

} // namespace rmcov::verify
