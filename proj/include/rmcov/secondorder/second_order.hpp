#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rmcov/core/truth_table.hpp"
#include "rmcov/core/walsh.hpp"
#include "rmcov/secondorder/coset_scan.hpp"
#include "rmcov/secondorder/quadratic_form.hpp"

namespace rmcov {

/// Histogram r -> |{q : nl(f + q) = r}| over homogeneous quadratic forms q.
struct NFhSpectrum {
    int n = 0;
    std::vector<std::uint64_t> counts;  // index r, size 2^(n-1) + 1

    [[nodiscard]] std::uint64_t at(int r) const
    {
        return r >= 0 && static_cast<std::size_t>(r) < counts.size() ? counts[static_cast<std::size_t>(r)] : 0;
    }

    /// sum_{i >= r} counts[i]
    [[nodiscard]] std::uint64_t tail_from(int r) const
    {
        std::uint64_t s = 0;
        for (std::size_t i = static_cast<std::size_t>(std::max(r, 0)); i < counts.size(); ++i) {
            s += counts[i];
        }
        return s;
    }

    [[nodiscard]] std::uint64_t total() const { return tail_from(0); }

    friend bool operator==(const NFhSpectrum&, const NFhSpectrum&) = default;
};

/// The forms g with nl(base + g) = r, in ascending coefficient order.
struct FhSet {
    TruthTable base;
    int r = 0;
    std::vector<QuadraticForm> members;
};

/// All 2^(n(n-1)/2) forms in Gray order; each step flips one coefficient.
inline std::vector<QuadraticForm> enumerate_quadratics(int n)
{
    require_var_count(n);
    const std::uint64_t total = std::uint64_t{1} << pair_count(n);
    std::vector<QuadraticForm> out;
    out.reserve(total);
    for (std::uint64_t k = 0; k < total; ++k) {
        out.emplace_back(n, gray(k));
    }
    return out;
}

/// nl(f + q) for every form q, indexed by q's coefficient bits.
inline std::vector<std::uint8_t> coset_nl_table(const TruthTable& f, unsigned threads = 1)
{
    std::vector<std::uint8_t> table(std::size_t{1} << pair_count(f.vars()));
    // chunks write disjoint entries, so the accumulator is a dummy
    reduce_cosets(
        f, threads, 0,
        [&](int&, std::uint32_t coeffs, int nl) {
            table[coeffs] = static_cast<std::uint8_t>(nl);
            return true;
        },
        [](int a, int) { return a; });
    return table;
}

/// Second-order nonlinearity: distance from f to RM(2, n).
///
/// The affine part of the nearest codeword is absorbed by nl, so only the
/// homogeneous quadratic forms are enumerated.
inline int nl2(const TruthTable& f, unsigned threads = 1)
{
    return reduce_cosets(
        f, threads, std::numeric_limits<int>::max(),
        [](int& best, std::uint32_t, int nl) {
            best = std::min(best, nl);
            return best > 0;
        },
        [](int a, int b) { return std::min(a, b); });
}

/// Like nl2, but stops once some coset falls below `floor`; the result is
/// exact whenever it is >= floor.
inline int nl2_bounded(const TruthTable& f, int floor, unsigned threads = 1)
{
    return reduce_cosets(
        f, threads, std::numeric_limits<int>::max(),
        [floor](int& best, std::uint32_t, int nl) {
            best = std::min(best, nl);
            return best >= floor;
        },
        [](int a, int b) { return std::min(a, b); });
}

inline NFhSpectrum nfh_spectrum(const TruthTable& f, unsigned threads = 1)
{
    using Counts = std::vector<std::uint64_t>;
    const std::size_t bins = (std::size_t{1} << (f.vars() - 1)) + 1;
    Counts counts = reduce_cosets(
        f, threads, Counts(bins, 0),
        [](Counts& c, std::uint32_t, int nl) {
            ++c[static_cast<std::size_t>(nl)];
            return true;
        },
        [](Counts a, const Counts& b) {
            for (std::size_t i = 0; i < a.size(); ++i) {
                a[i] += b[i];
            }
            return a;
        });
    return NFhSpectrum{f.vars(), std::move(counts)};
}

inline void require_six_vars(int n, const char* what)
{
    if (n != 6) {
        throw std::invalid_argument(std::string(what) + " is defined for 6-variable functions only, got n=" +
                                    std::to_string(n));
    }
}

inline FhSet fh_set_from_table(const TruthTable& f, int r, const std::vector<std::uint8_t>& table)
{
    FhSet s{f, r, {}};
    for (std::uint32_t c = 0; c < table.size(); ++c) {
        if (table[c] == r) {
            s.members.emplace_back(f.vars(), c);
        }
    }
    return s;
}

inline FhSet fh_set(const TruthTable& f, int r, unsigned threads = 1)
{
    require_six_vars(f.vars(), "Fh set");
    return fh_set_from_table(f, r, coset_nl_table(f, threads));
}

/// nl of every 6-variable quadratic form, indexed by coefficient bits.
inline const std::vector<std::uint8_t>& quadratic_nl_table()
{
    static const std::vector<std::uint8_t> table = coset_nl_table(TruthTable(6));
    return table;
}

/// q lies in S16, the 6-variable functions of nonlinearity 16.
inline bool in_s16(const QuadraticForm& q)
{
    require_six_vars(q.vars(), "S16 membership");
    return quadratic_nl_table()[q.coeffs()] == 16;
}

inline std::vector<QuadraticForm> s16_members(std::span<const QuadraticForm> forms)
{
    std::vector<QuadraticForm> out;
    std::copy_if(forms.begin(), forms.end(), std::back_inserter(out), [](const QuadraticForm& q) { return in_s16(q); });
    return out;
}

inline int s16_count(const FhSet& s)
{
    require_six_vars(s.base.vars(), "S16 count");
    return static_cast<int>(std::count_if(s.members.begin(), s.members.end(), [](const auto& q) { return in_s16(q); }));
}

/// |(g + s) ∩ S16|
inline int shifted_s16_count(const QuadraticForm& g, std::span<const QuadraticForm> members)
{
    require_six_vars(g.vars(), "shifted S16 count");
    return static_cast<int>(
        std::count_if(members.begin(), members.end(), [&](const QuadraticForm& k) { return in_s16(g + k); }));
}

inline int shifted_s16_count(const QuadraticForm& g, const FhSet& s) { return shifted_s16_count(g, s.members); }

/// |{h in H : |(h + H) ∩ S16| >= t}|
inline int pair_profile(std::span<const QuadraticForm> h_set, int t)
{
    int hits = 0;
    for (const auto& h : h_set) {
        if (shifted_s16_count(h, h_set) >= t) {
            ++hits;
        }
    }
    return hits;
}

/// pair_profile of (g + K) ∩ S16; g cancels in pairwise sums.
inline int shifted_pair_profile(const QuadraticForm& g, std::span<const QuadraticForm> k_set, int t)
{
    std::vector<QuadraticForm> shifted;
    for (const auto& k : k_set) {
        const QuadraticForm s = g + k;
        if (in_s16(s)) {
            shifted.push_back(s);
        }
    }
    return pair_profile(shifted, t);
}

/// min_q [nl(f1 + q) + nl(f2 + q)], which bounds nl2(f1 || f2) from above.
inline int concat_nl2_upper_bound(const TruthTable& f1, const TruthTable& f2, unsigned threads = 1)
{
    f1.require_same_vars(f2);
    if (f1.vars() > 6) {
        throw std::invalid_argument("concatenation bound needs n <= 6");
    }
    const auto t1 = coset_nl_table(f1, threads);
    const auto t2 = coset_nl_table(f2, threads);
    int best = std::numeric_limits<int>::max();
    for (std::size_t q = 0; q < t1.size(); ++q) {
        best = std::min(best, t1[q] + t2[q]);
    }
    return best;
}

/// min_q [a[q] + b[q ^ shift]] with early exit once the minimum drops below floor.
inline int min_shifted_sum(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b, std::uint32_t shift,
                           int floor = std::numeric_limits<int>::min())
{
    int best = std::numeric_limits<int>::max();
    for (std::uint32_t q = 0; q < a.size(); ++q) {
        best = std::min(best, a[q] + b[q ^ shift]);
        if (best < floor) {
            break;
        }
    }
    return best;
}

} // namespace rmcov
