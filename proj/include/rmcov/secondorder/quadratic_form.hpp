#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rmcov/core/text_format.hpp"
#include "rmcov/core/truth_table.hpp"

namespace rmcov {

inline constexpr int pair_count(int n) noexcept { return n * (n - 1) / 2; }

/// Coefficient bit of x_i x_j (0-based, i < j) in lexicographic pair order:
/// (1,2), (1,3), ..., (1,n), (2,3), ...
inline constexpr int pair_bit(int n, int i, int j) noexcept
{
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

/// 0-based (i, j) for a coefficient bit; inverse of pair_bit.
inline constexpr std::pair<int, int> bit_pair(int n, int bit) noexcept
{
    int i = 0;
    while (bit >= n - 1 - i) {
        bit -= n - 1 - i;
        ++i;
    }
    return {i, i + 1 + bit};
}

/// Homogeneous quadratic form sum a_ij x_i x_j, one coefficient bit per pair.
class QuadraticForm {
public:
    QuadraticForm(int n, std::uint32_t coeffs) : n_(n), coeffs_(coeffs)
    {
        require_var_count(n);
        if (coeffs >> pair_count(n)) {
            throw std::invalid_argument("quadratic coefficients exceed " + std::to_string(pair_count(n)) + " bits");
        }
    }

    static QuadraticForm zero(int n) { return QuadraticForm(n, 0); }

    [[nodiscard]] int vars() const noexcept { return n_; }
    [[nodiscard]] std::uint32_t coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] bool has(int i, int j) const noexcept { return (coeffs_ >> pair_bit(n_, i, j)) & 1U; }

    [[nodiscard]] QuadraticForm operator+(const QuadraticForm& other) const
    {
        if (other.n_ != n_) {
            throw std::invalid_argument("variable count mismatch in quadratic form sum");
        }
        return QuadraticForm(n_, coeffs_ ^ other.coeffs_);
    }

    friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;
    friend auto operator<=>(const QuadraticForm& a, const QuadraticForm& b)
    {
        return std::pair(a.n_, a.coeffs_) <=> std::pair(b.n_, b.coeffs_);
    }

private:
    int n_;
    std::uint32_t coeffs_;
};

/// Truth table of x_i x_j (0-based).
inline TruthTable pair_table(int n, int i, int j)
{
    return TruthTable::variable(n, i + 1) & TruthTable::variable(n, j + 1);
}

inline TruthTable quad_table(const QuadraticForm& q)
{
    TruthTable t(q.vars());
    for (int b = 0; b < pair_count(q.vars()); ++b) {
        if ((q.coeffs() >> b) & 1U) {
            const auto [i, j] = bit_pair(q.vars(), b);
            t ^= pair_table(q.vars(), i, j);
        }
    }
    return t;
}

/// "12+35+46" (1-based pairs, lexicographic), or "0" for the zero form.
inline std::string format_quadratic(const QuadraticForm& q)
{
    std::string out;
    for (int b = 0; b < pair_count(q.vars()); ++b) {
        if ((q.coeffs() >> b) & 1U) {
            const auto [i, j] = bit_pair(q.vars(), b);
            if (!out.empty()) {
                out.push_back('+');
            }
            out.push_back(static_cast<char>('1' + i));
            out.push_back(static_cast<char>('1' + j));
        }
    }
    return out.empty() ? "0" : out;
}

inline std::string format_quadratic_hex(const QuadraticForm& q)
{
    static constexpr char kDigits[] = "0123456789abcdef";
    const int digits = (pair_count(q.vars()) + 3) / 4;
    std::string out = "0x";
    for (int d = digits - 1; d >= 0; --d) {
        out.push_back(kDigits[(q.coeffs() >> (4 * d)) & 0xF]);
    }
    return out;
}

/// Accepts the pair list form or a "0x"-prefixed coefficient mask.
inline QuadraticForm parse_quadratic(std::string_view spec, int n)
{
    require_var_count(n);
    if (spec.size() > 2 && spec[0] == '0' && (spec[1] == 'x' || spec[1] == 'X')) {
        std::uint32_t v = 0;
        for (std::size_t i = 2; i < spec.size(); ++i) {
            const char c = spec[i];
            int d = -1;
            if (c >= '0' && c <= '9') {
                d = c - '0';
            } else if (c >= 'a' && c <= 'f') {
                d = c - 'a' + 10;
            } else if (c >= 'A' && c <= 'F') {
                d = c - 'A' + 10;
            }
            if (d < 0 || (v >> 28) != 0) {
                throw ParseError("invalid quadratic mask", i, std::string(1, c));
            }
            v = (v << 4) | static_cast<std::uint32_t>(d);
        }
        if (v >> pair_count(n)) {
            throw ParseError("quadratic mask exceeds " + std::to_string(pair_count(n)) + " bits", 0, std::string(spec));
        }
        return QuadraticForm(n, v);
    }
    const auto tokens = detail::split_terms(spec);
    if (tokens.size() == 1 && tokens[0].text == "0") {
        return QuadraticForm::zero(n);
    }
    std::uint32_t coeffs = 0;
    for (const auto& tok : tokens) {
        if (tok.text.size() != 2 || tok.text[0] < '1' || tok.text[1] < '1' || tok.text[0] > '0' + n ||
            tok.text[1] > '0' + n || tok.text[0] >= tok.text[1]) {
            throw ParseError("expected a pair 'ij' with 1 <= i < j <= " + std::to_string(n), tok.position,
                             std::string(tok.text));
        }
        const std::uint32_t bit = 1U << pair_bit(n, tok.text[0] - '1', tok.text[1] - '1');
        if (coeffs & bit) {
            throw ParseError("duplicate pair", tok.position, std::string(tok.text));
        }
        coeffs |= bit;
    }
    return QuadraticForm(n, coeffs);
}

/// Bit-to-pair mapping table, one line per coefficient bit.
inline std::string explain_layout(int n)
{
    require_var_count(n);
    std::string out = "quadratic form layout, n=" + std::to_string(n) + " (" + std::to_string(pair_count(n)) +
                      " coefficient bits, lexicographic pairs)\n";
    for (int b = 0; b < pair_count(n); ++b) {
        const auto [i, j] = bit_pair(n, b);
        out += "bit " + std::to_string(b) + (b < 10 ? "  " : " ") + "mask 0x";
        const int digits = (pair_count(n) + 3) / 4;
        static constexpr char kDigits[] = "0123456789abcdef";
        for (int d = digits - 1; d >= 0; --d) {
            out.push_back(kDigits[((1U << b) >> (4 * d)) & 0xF]);
        }
        out += "  x" + std::to_string(i + 1) + "x" + std::to_string(j + 1) + "\n";
    }
    return out;
}

} // namespace rmcov
