#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace rmcov {

inline constexpr int kMinVars = 3;
inline constexpr int kMaxVars = 7;

inline void require_var_count(int n)
{
    if (n < kMinVars || n > kMaxVars) {
        throw std::invalid_argument("variable count " + std::to_string(n) + " outside [" +
                                    std::to_string(kMinVars) + ", " + std::to_string(kMaxVars) + "]");
    }
}

/* indices where variable x_{k+1} is 1, inside one 64-bit word (k < 6) */
inline constexpr std::array<std::uint64_t, 6> kVarMaskPos = {
    0xaaaaaaaaaaaaaaaaULL, 0xccccccccccccccccULL, 0xf0f0f0f0f0f0f0f0ULL,
    0xff00ff00ff00ff00ULL, 0xffff0000ffff0000ULL, 0xffffffff00000000ULL};

inline constexpr std::array<std::uint64_t, 6> kVarMaskNeg = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0f0f0f0f0f0f0f0fULL,
    0x00ff00ff00ff00ffULL, 0x0000ffff0000ffffULL, 0x00000000ffffffffULL};

/// Output column of an n-variable Boolean function, 3 <= n <= 7.
///
/// Bit i holds f(x) where x_j is bit j-1 of i, so x_1 is the least
/// significant index bit and x_n the most significant. Bits beyond 2^n are
/// always zero.
class TruthTable {
public:
    using Words = std::array<std::uint64_t, 2>;

    explicit TruthTable(int n) : n_(n) { require_var_count(n); }

    TruthTable(int n, Words words) : n_(n), words_(words)
    {
        require_var_count(n);
        words_[0] &= low_mask();
        if (n_ < 7) {
            words_[1] = 0;
        }
    }

    static TruthTable constant(int n, bool value)
    {
        TruthTable t(n);
        if (value) {
            t.words_ = {~0ULL, ~0ULL};
            t.words_[0] &= t.low_mask();
            if (n < 7) {
                t.words_[1] = 0;
            }
        }
        return t;
    }

    /// x_var (1-based) as a function of n variables.
    static TruthTable variable(int n, int var)
    {
        require_var_count(n);
        if (var < 1 || var > n) {
            throw std::invalid_argument("variable index " + std::to_string(var) + " outside [1, " +
                                        std::to_string(n) + "]");
        }
        if (var <= 6) {
            return TruthTable(n, {kVarMaskPos[var - 1], kVarMaskPos[var - 1]});
        }
        return TruthTable(n, {0, ~0ULL});
    }

    template <class Fn>
    static TruthTable from_predicate(int n, Fn&& fn)
    {
        TruthTable t(n);
        for (std::uint32_t x = 0; x < t.size(); ++x) {
            t.set(x, static_cast<bool>(fn(x)));
        }
        return t;
    }

    [[nodiscard]] int vars() const noexcept { return n_; }
    [[nodiscard]] std::uint32_t size() const noexcept { return 1U << n_; }
    [[nodiscard]] const Words& words() const noexcept { return words_; }

    [[nodiscard]] bool get(std::uint32_t x) const noexcept { return (words_[x >> 6] >> (x & 63)) & 1U; }

    void set(std::uint32_t x, bool value) noexcept
    {
        const std::uint64_t bit = 1ULL << (x & 63);
        if (value) {
            words_[x >> 6] |= bit;
        } else {
            words_[x >> 6] &= ~bit;
        }
    }

    [[nodiscard]] int weight() const noexcept
    {
        return std::popcount(words_[0]) + std::popcount(words_[1]);
    }

    TruthTable& operator^=(const TruthTable& other)
    {
        require_same_vars(other);
        words_[0] ^= other.words_[0];
        words_[1] ^= other.words_[1];
        return *this;
    }

    friend TruthTable operator^(TruthTable a, const TruthTable& b) { return a ^= b; }
    friend TruthTable operator+(TruthTable a, const TruthTable& b) { return a ^= b; }

    TruthTable& operator&=(const TruthTable& other)
    {
        require_same_vars(other);
        words_[0] &= other.words_[0];
        words_[1] &= other.words_[1];
        return *this;
    }

    friend TruthTable operator&(TruthTable a, const TruthTable& b) { return a &= b; }

    /// f + 1
    [[nodiscard]] TruthTable complement() const { return *this ^ constant(n_, true); }

    friend bool operator==(const TruthTable&, const TruthTable&) = default;

    void require_same_vars(const TruthTable& other) const
    {
        if (other.n_ != n_) {
            throw std::invalid_argument("variable count mismatch: " + std::to_string(n_) + " vs " +
                                        std::to_string(other.n_));
        }
    }

private:
    [[nodiscard]] std::uint64_t low_mask() const noexcept
    {
        return n_ >= 6 ? ~0ULL : ((1ULL << (1U << n_)) - 1);
    }

    int n_;
    Words words_{0, 0};
};

/// Hamming distance: weight of f + g.
inline int distance(const TruthTable& f, const TruthTable& g) { return (f ^ g).weight(); }

/// f1 || f2: equal to f1 where x_{n+1} = 0 and to f2 where x_{n+1} = 1.
inline TruthTable concat(const TruthTable& f1, const TruthTable& f2)
{
    f1.require_same_vars(f2);
    const int n = f1.vars();
    if (n + 1 > kMaxVars) {
        throw std::invalid_argument("concatenation would exceed " + std::to_string(kMaxVars) + " variables");
    }
    if (n == 6) {
        return TruthTable(7, {f1.words()[0], f2.words()[0]});
    }
    const unsigned half = 1U << n;
    return TruthTable(n + 1, {f1.words()[0] | (f2.words()[0] << half), 0});
}

/// Restriction to x_n = 0 (low half) or x_n = 1 (high half); inverse of concat.
inline TruthTable restrict_top(const TruthTable& f, bool top)
{
    const int n = f.vars();
    if (n - 1 < kMinVars) {
        throw std::invalid_argument("cannot restrict below " + std::to_string(kMinVars) + " variables");
    }
    if (n == 7) {
        return TruthTable(6, {f.words()[top ? 1 : 0], 0});
    }
    const unsigned half = 1U << (n - 1);
    return TruthTable(n - 1, {top ? f.words()[0] >> half : f.words()[0], 0});
}

} // namespace rmcov
