#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rmcov/core/anf.hpp"
#include "rmcov/core/text_format.hpp"
#include "rmcov/core/truth_table.hpp"
#include "rmcov/secondorder/quadratic_form.hpp"
#include "rmcov/secondorder/second_order.hpp"
#include "rmcov/verify/representatives.hpp"

namespace rmcov::verify {

inline constexpr int kCoveringRadius27 = 40;

struct WitnessResult {
    bool found = false;
    std::optional<TruthTable> function;  // the witness, or the best candidate seen
    int nl2 = -1;                        // exact value for `function`
    std::uint64_t candidates = 0;        // candidates evaluated
    std::uint64_t index = 0;             // candidate index of `function`
    std::string origin;
    int max_sample_nl2 = -1;             // largest nl2 over all evaluated candidates
    std::uint64_t samples_above_target = 0;
};

namespace detail {

// Random cubic in B_7: each monomial of degree <= 3 with probability 1/2.
inline TruthTable random_cubic7(std::mt19937_64& rng)
{
    std::vector<Monomial> terms;
    for (unsigned m = 0; m < 128; ++m) {
        if (std::popcount(m) <= 3 && (rng() & 1U)) {
            terms.push_back(static_cast<Monomial>(m));
        }
    }
    return from_anf(AnfTermSet(7, std::move(terms)));
}

} // namespace detail

/// Looks for f in B_7 with nl2(f) = 40.
///
/// Candidates are evaluated in a fixed index order: first the concatenations
/// a || (b + h) of fixture functions a, b (same-fixture pairs first) with every
/// quadratic offset h, then uniformly random cubics drawn from `seed`. Each
/// candidate's nl2 comes from the exact split min_q [nl(a+q) + nl(b+h+q)].
/// Stops at the first witness or after `budget` candidates.
inline WitnessResult search_witness(std::uint64_t budget, std::uint64_t seed,
                                    const std::vector<Representative>& fixtures = default_representatives())
{
    if (budget == 0) {
        throw std::invalid_argument("witness search budget must be at least 1");
    }
    WitnessResult res;
    const int target = kCoveringRadius27;

    std::vector<TruthTable> tables;
    std::vector<std::vector<std::uint8_t>> coset_tables;
    for (const auto& r : fixtures) {
        tables.push_back(from_anf(r.anf));
        coset_tables.push_back(coset_nl_table(tables.back()));
    }

    auto consider = [&](int value, auto&& make_function, auto&& describe) {
        const std::uint64_t idx = res.candidates++;
        res.max_sample_nl2 = std::max(res.max_sample_nl2, value);
        if (value > target) {
            ++res.samples_above_target;
        }
        if (value > res.nl2) {
            res.nl2 = value;
            res.function = make_function();
            res.index = idx;
            res.origin = describe();
        }
        if (value == target) {
            res.found = true;
        }
        return res.found || res.candidates >= budget;
    };

    const std::size_t count = fixtures.size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < count; ++i) {
        pairs.emplace_back(i, i);
    }
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
            if (i != j) {
                pairs.emplace_back(i, j);
            }
        }
    }

    for (const auto& [i, j] : pairs) {
        const auto& ta = coset_tables[i];
        const auto& tb = coset_tables[j];
        for (std::uint32_t h = 0; h < ta.size(); ++h) {
            const bool stop = consider(
                min_shifted_sum(ta, tb, h),
                [&] { return concat(tables[i], tables[j] ^ quad_table(QuadraticForm(6, h))); },
                [&] {
                    return fixtures[i].id + " || (" + fixtures[j].id + " + " +
                           format_quadratic(QuadraticForm(6, h)) + ")";
                });
            if (stop) {
                return res;
            }
        }
    }

    std::mt19937_64 rng(seed);
    while (true) {
        const TruthTable f = detail::random_cubic7(rng);
        const auto ta = coset_nl_table(restrict_top(f, false));
        const auto tb = coset_nl_table(restrict_top(f, true));
        const bool stop = consider(
            min_shifted_sum(ta, tb, 0), [&] { return f; }, [&] { return "random cubic " + format_anf(to_anf(f)); });
        if (stop) {
            return res;
        }
    }
}

} // namespace rmcov::verify
