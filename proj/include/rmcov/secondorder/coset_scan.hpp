#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <thread>
#include <vector>

#include "rmcov/core/truth_table.hpp"
#include "rmcov/core/walsh.hpp"
#include "rmcov/secondorder/quadratic_form.hpp"

namespace rmcov {

/// Gray code of step k: consecutive steps differ in exactly one coefficient bit.
inline constexpr std::uint32_t gray(std::uint64_t k) noexcept
{
    return static_cast<std::uint32_t>(k ^ (k >> 1));
}

/// Walks f + q for every homogeneous quadratic q with Gray index in [begin, end),
/// keeping the coset table current by XORing one pair table per step.
///
/// visit(coeffs, nl) returns false to stop early. Returns false if stopped.
template <class Visit>
bool scan_cosets(const TruthTable& f, std::uint64_t begin, std::uint64_t end, Visit&& visit)
{
    const int n = f.vars();
    const int pairs = pair_count(n);
    std::array<TruthTable::Words, pair_count(kMaxVars)> pair_words{};
    for (int b = 0; b < pairs; ++b) {
        const auto [i, j] = bit_pair(n, b);
        pair_words[static_cast<std::size_t>(b)] = pair_table(n, i, j).words();
    }
    if (begin >= end) {
        return true;
    }

    std::uint32_t coeffs = gray(begin);
    TruthTable::Words w = f.words();
    for (int b = 0; b < pairs; ++b) {
        if ((coeffs >> b) & 1U) {
            w[0] ^= pair_words[static_cast<std::size_t>(b)][0];
            w[1] ^= pair_words[static_cast<std::size_t>(b)][1];
        }
    }

    for (std::uint64_t k = begin;;) {
        if (!visit(coeffs, nonlinearity(TruthTable(n, w)))) {
            return false;
        }
        if (++k == end) {
            break;
        }
        const int b = std::countr_zero(k);
        coeffs ^= 1U << b;
        w[0] ^= pair_words[static_cast<std::size_t>(b)][0];
        w[1] ^= pair_words[static_cast<std::size_t>(b)][1];
    }
    return true;
}

/// Splits the Gray index range into `threads` contiguous chunks, folds each
/// with its own accumulator copy and merges them in chunk order, so the
/// result does not depend on the thread count whenever merge is associative.
template <class Acc, class Visit, class Merge>
Acc reduce_cosets(const TruthTable& f, unsigned threads, Acc init, Visit visit, Merge merge)
{
    const std::uint64_t total = std::uint64_t{1} << pair_count(f.vars());
    threads = std::clamp<unsigned>(threads, 1U, 64U);
    if (threads == 1) {
        Acc acc = init;
        scan_cosets(f, 0, total, [&](std::uint32_t c, int nl) { return visit(acc, c, nl); });
        return acc;
    }
    std::vector<Acc> partial(threads, init);
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < threads; ++t) {
        const std::uint64_t lo = total * t / threads;
        const std::uint64_t hi = total * (t + 1) / threads;
        workers.emplace_back([&, t, lo, hi] {
            scan_cosets(f, lo, hi, [&](std::uint32_t c, int nl) { return visit(partial[t], c, nl); });
        });
    }
    for (auto& w : workers) {
        w.join();
    }
    Acc acc = init;
    for (auto& p : partial) {
        acc = merge(std::move(acc), std::move(p));
    }
    return acc;
}

} // namespace rmcov
