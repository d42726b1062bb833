#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "rmcov/core/truth_table.hpp"

namespace rmcov {

/// Monomial as a variable mask: bit j-1 set means x_j divides the term.
using Monomial = std::uint8_t;

/// Set of ANF terms with coefficient 1. Terms are kept sorted and unique.
class AnfTermSet {
public:
    explicit AnfTermSet(int n) : n_(n) { require_var_count(n); }

    AnfTermSet(int n, std::vector<Monomial> terms) : n_(n), terms_(std::move(terms))
    {
        require_var_count(n);
        std::sort(terms_.begin(), terms_.end());
        if (std::adjacent_find(terms_.begin(), terms_.end()) != terms_.end()) {
            throw std::invalid_argument("duplicate ANF term");
        }
        for (Monomial m : terms_) {
            if (m >> n_) {
                throw std::invalid_argument("ANF term uses a variable above x" + std::to_string(n_));
            }
        }
    }

    /// Terms given as lists of 1-based variable indices, e.g. {{1,2,6},{1,3,5}}.
    AnfTermSet(int n, std::initializer_list<std::initializer_list<int>> terms) : n_(n)
    {
        require_var_count(n);
        std::vector<Monomial> masks;
        for (const auto& term : terms) {
            Monomial m = 0;
            for (int var : term) {
                if (var < 1 || var > n) {
                    throw std::invalid_argument("variable index " + std::to_string(var) + " outside [1, " +
                                                std::to_string(n) + "]");
                }
                m |= static_cast<Monomial>(1U << (var - 1));
            }
            masks.push_back(m);
        }
        *this = AnfTermSet(n, std::move(masks));
    }

    [[nodiscard]] int vars() const noexcept { return n_; }
    [[nodiscard]] const std::vector<Monomial>& terms() const noexcept { return terms_; }
    [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }

    [[nodiscard]] bool contains(Monomial m) const { return std::binary_search(terms_.begin(), terms_.end(), m); }

    /// Symmetric difference, i.e. polynomial addition over GF(2).
    [[nodiscard]] AnfTermSet operator+(const AnfTermSet& other) const
    {
        if (other.n_ != n_) {
            throw std::invalid_argument("variable count mismatch in ANF sum");
        }
        std::vector<Monomial> out;
        std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end(),
                                      std::back_inserter(out));
        return AnfTermSet(n_, std::move(out));
    }

    [[nodiscard]] int degree() const noexcept
    {
        int d = 0;
        for (Monomial m : terms_) {
            d = std::max(d, std::popcount(m));
        }
        return d;
    }

    friend bool operator==(const AnfTermSet&, const AnfTermSet&) = default;

private:
    int n_;
    std::vector<Monomial> terms_;
};

namespace detail {

// Binary Moebius transform over the 2^n-bit table; it is its own inverse.
inline TruthTable::Words moebius(TruthTable::Words w, int n) noexcept
{
    for (int k = 0; k < std::min(n, 6); ++k) {
        const unsigned shift = 1U << k;
        w[0] ^= (w[0] & kVarMaskNeg[k]) << shift;
        w[1] ^= (w[1] & kVarMaskNeg[k]) << shift;
    }
    if (n == 7) {
        w[1] ^= w[0];
    }
    return w;
}

} // namespace detail

inline TruthTable from_anf(const AnfTermSet& anf)
{
    TruthTable coeffs(anf.vars());
    for (Monomial m : anf.terms()) {
        coeffs.set(m, true);
    }
    return TruthTable(anf.vars(), detail::moebius(coeffs.words(), anf.vars()));
}

inline AnfTermSet to_anf(const TruthTable& f)
{
    const TruthTable coeffs(f.vars(), detail::moebius(f.words(), f.vars()));
    std::vector<Monomial> terms;
    for (std::uint32_t m = 0; m < coeffs.size(); ++m) {
        if (coeffs.get(m)) {
            terms.push_back(static_cast<Monomial>(m));
        }
    }
    return AnfTermSet(f.vars(), std::move(terms));
}

/// Algebraic degree; 0 for both constants.
inline int degree(const TruthTable& f) { return to_anf(f).degree(); }

} // namespace rmcov
