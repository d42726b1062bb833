#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "rmcov/core/truth_table.hpp"

namespace rmcov {

/// x -> Ax + b over GF(2)^n with A invertible.
///
/// Row r of A is a bitmask over input coordinates; (Ax)_r = parity(row_r & x).
class AffineMap {
public:
    using Rows = std::array<std::uint8_t, kMaxVars>;

    AffineMap(int n, Rows rows, std::uint8_t shift) : n_(n), rows_(rows), shift_(shift)
    {
        require_var_count(n);
        const std::uint8_t mask = static_cast<std::uint8_t>((1U << n) - 1);
        for (int r = n; r < kMaxVars; ++r) {
            if (rows_[r] != 0) {
                throw std::invalid_argument("affine map has rows beyond its dimension");
            }
        }
        for (int r = 0; r < n; ++r) {
            if (rows_[r] & ~mask) {
                throw std::invalid_argument("affine map row has columns beyond its dimension");
            }
        }
        if (shift_ & ~mask) {
            throw std::invalid_argument("affine shift has bits beyond its dimension");
        }
        if (!invertible(n, rows_)) {
            throw std::invalid_argument("affine map matrix is singular over GF(2)");
        }
    }

    static AffineMap identity(int n)
    {
        require_var_count(n);
        Rows rows{};
        for (int r = 0; r < n; ++r) {
            rows[r] = static_cast<std::uint8_t>(1U << r);
        }
        return AffineMap(n, rows, 0);
    }

    [[nodiscard]] int dim() const noexcept { return n_; }
    [[nodiscard]] const Rows& rows() const noexcept { return rows_; }
    [[nodiscard]] std::uint8_t shift() const noexcept { return shift_; }

    [[nodiscard]] std::uint32_t operator()(std::uint32_t x) const noexcept
    {
        std::uint32_t y = shift_;
        for (int r = 0; r < n_; ++r) {
            y ^= static_cast<std::uint32_t>(std::popcount(static_cast<unsigned>(rows_[r] & x)) & 1) << r;
        }
        return y;
    }

    /// y -> A^{-1}(y + b)
    [[nodiscard]] AffineMap inverse() const
    {
        // Gauss-Jordan on [A | I]
        Rows a = rows_;
        Rows inv{};
        for (int r = 0; r < n_; ++r) {
            inv[r] = static_cast<std::uint8_t>(1U << r);
        }
        for (int col = 0; col < n_; ++col) {
            int pivot = col;
            while (!((a[pivot] >> col) & 1U)) {
                ++pivot;
            }
            std::swap(a[pivot], a[col]);
            std::swap(inv[pivot], inv[col]);
            for (int r = 0; r < n_; ++r) {
                if (r != col && ((a[r] >> col) & 1U)) {
                    a[r] ^= a[col];
                    inv[r] ^= inv[col];
                }
            }
        }
        AffineMap linear_inv(n_, inv, 0);
        return AffineMap(n_, inv, static_cast<std::uint8_t>(linear_inv(shift_)));
    }

    friend bool operator==(const AffineMap&, const AffineMap&) = default;

    static bool invertible(int n, Rows rows) noexcept
    {
        for (int col = 0; col < n; ++col) {
            int pivot = -1;
            for (int r = col; r < n; ++r) {
                if ((rows[r] >> col) & 1U) {
                    pivot = r;
                    break;
                }
            }
            if (pivot < 0) {
                return false;
            }
            std::swap(rows[pivot], rows[col]);
            for (int r = 0; r < n; ++r) {
                if (r != col && ((rows[r] >> col) & 1U)) {
                    rows[r] ^= rows[col];
                }
            }
        }
        return true;
    }

private:
    int n_;
    Rows rows_;
    std::uint8_t shift_;
};

/// x -> f(Ax + b)
inline TruthTable apply_affine(const TruthTable& f, const AffineMap& m)
{
    if (f.vars() != m.dim()) {
        throw std::invalid_argument("affine map dimension does not match function");
    }
    return TruthTable::from_predicate(f.vars(), [&](std::uint32_t x) { return f.get(m(x)); });
}

/// Uniform invertible A (rejection sampling) and uniform b, deterministic in seed.
inline AffineMap random_affine(int n, std::uint64_t seed)
{
    require_var_count(n);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned> row_dist(0, (1U << n) - 1);
    AffineMap::Rows rows{};
    do {
        for (int r = 0; r < n; ++r) {
            rows[r] = static_cast<std::uint8_t>(row_dist(rng));
        }
    } while (!AffineMap::invertible(n, rows));
    return AffineMap(n, rows, static_cast<std::uint8_t>(row_dist(rng)));
}

} // namespace rmcov
