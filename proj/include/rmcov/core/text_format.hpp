#pragma once

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rmcov/core/anf.hpp"
#include "rmcov/core/truth_table.hpp"

// Text formats:
//   ANF  "126+135+234"  one term per '+', each term the digits of its variables;
//        "c" is the constant-1 term and "0" alone is the zero function.
//   hex  2^n/4 digits, most significant digit first (highest indices).

namespace rmcov {

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position, std::string token)
        : std::invalid_argument(what + " at position " + std::to_string(position) + " ('" + token + "')"),
          position_(position), token_(std::move(token))
    {
    }

    [[nodiscard]] std::size_t position() const noexcept { return position_; }
    [[nodiscard]] const std::string& token() const noexcept { return token_; }

private:
    std::size_t position_;
    std::string token_;
};

namespace detail {

inline bool is_blank(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

struct Token {
    std::string_view text;
    std::size_t position;
};

// Split on '+', trimming blanks; positions index the original string.
inline std::vector<Token> split_terms(std::string_view spec)
{
    std::vector<Token> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t plus = spec.find('+', start);
        const std::size_t end = plus == std::string_view::npos ? spec.size() : plus;
        std::size_t b = start;
        std::size_t e = end;
        while (b < e && is_blank(spec[b])) {
            ++b;
        }
        while (e > b && is_blank(spec[e - 1])) {
            --e;
        }
        out.push_back({spec.substr(b, e - b), b});
        if (plus == std::string_view::npos) {
            break;
        }
        start = plus + 1;
    }
    return out;
}

} // namespace detail

/// Largest variable index mentioned in an ANF string (0 if none).
inline int max_anf_index(std::string_view spec)
{
    int m = 0;
    for (char c : spec) {
        if (c >= '1' && c <= '9') {
            m = std::max(m, c - '0');
        }
    }
    return m;
}

inline AnfTermSet parse_anf(std::string_view spec, int n)
{
    require_var_count(n);
    const auto tokens = detail::split_terms(spec);
    if (tokens.size() == 1 && tokens[0].text == "0") {
        return AnfTermSet(n);
    }
    std::vector<Monomial> terms;
    for (const auto& tok : tokens) {
        if (tok.text.empty()) {
            throw ParseError("empty ANF term", tok.position, std::string(tok.text));
        }
        Monomial m = 0;
        if (tok.text != "c") {
            for (std::size_t i = 0; i < tok.text.size(); ++i) {
                const char c = tok.text[i];
                const std::string where(1, c);
                if (c < '1' || c > '9') {
                    throw ParseError("unexpected character in ANF term", tok.position + i, where);
                }
                const int var = c - '0';
                if (var > n) {
                    throw ParseError("variable index exceeds n=" + std::to_string(n), tok.position + i, where);
                }
                const auto bit = static_cast<Monomial>(1U << (var - 1));
                if (m & bit) {
                    throw ParseError("repeated variable in ANF term", tok.position + i, where);
                }
                m |= bit;
            }
        }
        if (std::find(terms.begin(), terms.end(), m) != terms.end()) {
            throw ParseError("duplicate ANF term", tok.position, std::string(tok.text));
        }
        terms.push_back(m);
    }
    return AnfTermSet(n, std::move(terms));
}

/// Terms by descending degree, then by their index strings; "c" last, "0" if empty.
inline std::string format_anf(const AnfTermSet& anf)
{
    if (anf.empty()) {
        return "0";
    }
    std::vector<std::string> parts;
    for (Monomial m : anf.terms()) {
        std::string s;
        for (int v = 0; v < anf.vars(); ++v) {
            if ((m >> v) & 1U) {
                s.push_back(static_cast<char>('1' + v));
            }
        }
        parts.push_back(m == 0 ? "c" : s);
    }
    std::sort(parts.begin(), parts.end(), [](const std::string& a, const std::string& b) {
        const std::size_t da = a == "c" ? 0 : a.size();
        const std::size_t db = b == "c" ? 0 : b.size();
        if (da != db) {
            return da > db;
        }
        return a < b;
    });
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) {
            out.push_back('+');
        }
        out += p;
    }
    return out;
}

inline TruthTable parse_hex(std::string_view spec, int n)
{
    require_var_count(n);
    std::size_t offset = 0;
    if (spec.size() >= 2 && spec[0] == '0' && (spec[1] == 'x' || spec[1] == 'X')) {
        offset = 2;
    }
    const std::string_view digits = spec.substr(offset);
    const std::size_t expected = (std::size_t{1} << n) / 4;
    if (digits.size() != expected) {
        throw ParseError("hex table for n=" + std::to_string(n) + " needs " + std::to_string(expected) +
                             " digits, got " + std::to_string(digits.size()),
                         offset, std::string(digits));
    }
    TruthTable t(n);
    for (std::size_t i = 0; i < digits.size(); ++i) {
        const char c = digits[i];
        int v = 0;
        if (c >= '0' && c <= '9') {
            v = c - '0';
        } else if (c >= 'a' && c <= 'f') {
            v = c - 'a' + 10;
        } else if (c >= 'A' && c <= 'F') {
            v = c - 'A' + 10;
        } else {
            throw ParseError("invalid hex digit", offset + i, std::string(1, c));
        }
        const std::uint32_t base = static_cast<std::uint32_t>(digits.size() - 1 - i) * 4;
        for (int b = 0; b < 4; ++b) {
            t.set(base + static_cast<std::uint32_t>(b), (v >> b) & 1);
        }
    }
    return t;
}

/// Lowercase, no prefix.
inline std::string format_hex(const TruthTable& f)
{
    static constexpr char kDigits[] = "0123456789abcdef";
    const std::uint32_t count = f.size() / 4;
    std::string out(count, '0');
    for (std::uint32_t k = 0; k < count; ++k) {
        int v = 0;
        for (int b = 0; b < 4; ++b) {
            v |= static_cast<int>(f.get(4 * k + static_cast<std::uint32_t>(b))) << b;
        }
        out[count - 1 - k] = kDigits[v];
    }
    return out;
}

} // namespace rmcov
