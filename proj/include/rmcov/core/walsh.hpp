#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <vector>

#include "rmcov/core/truth_table.hpp"

namespace rmcov {

/// values[a] = sum_x (-1)^(f(x) + a.x), indexed by the linear mask a.
struct WalshSpectrum {
    int n = 0;
    std::vector<std::int32_t> values;

    friend bool operator==(const WalshSpectrum&, const WalshSpectrum&) = default;
};

namespace detail {

using SignBuffer = std::array<std::int32_t, 1U << kMaxVars>;

inline void load_signs(const TruthTable& f, SignBuffer& buf) noexcept
{
    const std::uint32_t size = f.size();
    const auto& w = f.words();
    for (std::uint32_t x = 0; x < size; ++x) {
        buf[x] = 1 - 2 * static_cast<std::int32_t>((w[x >> 6] >> (x & 63)) & 1U);
    }
}

template <std::uint32_t Size>
inline void butterfly(std::int32_t* v) noexcept
{
    for (std::uint32_t h = 1; h < Size; h <<= 1) {
        for (std::uint32_t i = 0; i < Size; i += h << 1) {
            for (std::uint32_t j = i; j < i + h; ++j) {
                const std::int32_t a = v[j];
                const std::int32_t b = v[j + h];
                v[j] = a + b;
                v[j + h] = a - b;
            }
        }
    }
}

inline void butterfly(std::int32_t* v, int n) noexcept
{
    switch (n) {
    case 3: butterfly<8>(v); break;
    case 4: butterfly<16>(v); break;
    case 5: butterfly<32>(v); break;
    case 6: butterfly<64>(v); break;
    default: butterfly<128>(v); break;
    }
}

inline std::int32_t max_abs(const std::int32_t* v, std::uint32_t size) noexcept
{
    std::int32_t m = 0;
    for (std::uint32_t i = 0; i < size; ++i) {
        m = std::max(m, v[i] < 0 ? -v[i] : v[i]);
    }
    return m;
}

} // namespace detail

inline WalshSpectrum fwht(const TruthTable& f)
{
    detail::SignBuffer buf;
    detail::load_signs(f, buf);
    detail::butterfly(buf.data(), f.vars());
    return WalshSpectrum{f.vars(), std::vector<std::int32_t>(buf.begin(), buf.begin() + f.size())};
}

/// Distance to the nearest affine function: 2^(n-1) - max|W_f|/2.
inline int nonlinearity(const TruthTable& f) noexcept
{
    detail::SignBuffer buf;
    detail::load_signs(f, buf);
    detail::butterfly(buf.data(), f.vars());
    return static_cast<int>((f.size() >> 1) - detail::max_abs(buf.data(), f.size()) / 2);
}

} // namespace rmcov
