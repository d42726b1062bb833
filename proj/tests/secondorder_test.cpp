#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rmcov/core.hpp"
#include "rmcov/secondorder.hpp"

namespace {

using rmcov::QuadraticForm;
using rmcov::TruthTable;

TruthTable from_bits(const oracle::Bits& b, int n)
{
    return TruthTable::from_predicate(n, [&](std::uint32_t x) { return b[x]; });
}

const std::vector<std::string>& fixture_anfs()
{
    static const std::vector<std::string> v = {
        "126+135+234",
        "1234+126+145+235",
        "1234+135+146+235+236+245",
        "1236+1245+135+145+146+234",
        "12345+135+146+235+236+245",
        "123456+126+135+234",
        "123456+1234+126+145+235+45",
        "123456+1234+135+146+235+236+245",
        "123456+1236+1245+135+145+146+234+46",
        "123456+1234+134+156+234+236+245+34+36+45",
        "123456+1236+1245+135+145+146+234+236+245+35+45+46",
        "123456+2345+1256+1346+124+125+235+345+126+346",
    };
    return v;
}

TruthTable fixture(int i) { return rmcov::from_anf(rmcov::parse_anf(fixture_anfs()[static_cast<std::size_t>(i - 1)], 6)); }

TEST(QuadraticForm, PairLayoutIsBijective)
{
    for (int n = 3; n <= 7; ++n) {
        std::set<int> seen;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const int b = rmcov::pair_bit(n, i, j);
                ASSERT_GE(b, 0);
                ASSERT_LT(b, rmcov::pair_count(n));
                EXPECT_EQ(rmcov::bit_pair(n, b), std::make_pair(i, j));
                seen.insert(b);
            }
        }
        EXPECT_EQ(static_cast<int>(seen.size()), rmcov::pair_count(n));
    }
    EXPECT_EQ(rmcov::pair_bit(6, 0, 1), 0);
    EXPECT_EQ(rmcov::pair_bit(6, 0, 5), 4);
    EXPECT_EQ(rmcov::pair_bit(6, 1, 2), 5);
    EXPECT_EQ(rmcov::pair_bit(6, 4, 5), 14);
}

TEST(QuadraticForm, TableMatchesPairProducts)
{
    std::mt19937_64 rng(31);
    for (int n = 3; n <= 7; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            const std::uint32_t c = static_cast<std::uint32_t>(rng()) & ((1U << rmcov::pair_count(n)) - 1);
            const QuadraticForm q(n, c);
            const TruthTable t = rmcov::quad_table(q);
            for (std::uint32_t x = 0; x < t.size(); ++x) {
                bool v = false;
                for (int i = 0; i < n; ++i) {
                    for (int j = i + 1; j < n; ++j) {
                        v ^= q.has(i, j) && ((x >> i) & 1U) && ((x >> j) & 1U);
                    }
                }
                ASSERT_EQ(t.get(x), v);
            }
        }
    }
}

TEST(QuadraticForm, TextRoundTrip)
{
    const auto q = rmcov::parse_quadratic("12+35+46", 6);
    EXPECT_TRUE(q.has(0, 1));
    EXPECT_TRUE(q.has(2, 4));
    EXPECT_TRUE(q.has(3, 5));
    EXPECT_EQ(rmcov::format_quadratic(q), "12+35+46");
    EXPECT_EQ(rmcov::parse_quadratic(rmcov::format_quadratic_hex(q), 6), q);
    EXPECT_EQ(rmcov::format_quadratic(QuadraticForm::zero(6)), "0");
    EXPECT_EQ(rmcov::parse_quadratic("0", 6), QuadraticForm::zero(6));
    for (std::uint32_t c = 0; c < (1U << 15); c += 97) {
        const QuadraticForm r(6, c);
        ASSERT_EQ(rmcov::parse_quadratic(rmcov::format_quadratic(r), 6), r);
        ASSERT_EQ(rmcov::parse_quadratic(rmcov::format_quadratic_hex(r), 6), r);
    }
    EXPECT_THROW((void)rmcov::parse_quadratic("21", 6), rmcov::ParseError);
    EXPECT_THROW((void)rmcov::parse_quadratic("17", 6), rmcov::ParseError);
    EXPECT_THROW((void)rmcov::parse_quadratic("12+12", 6), rmcov::ParseError);
    EXPECT_THROW((void)rmcov::parse_quadratic("0x8000", 6), rmcov::ParseError);
    EXPECT_NE(rmcov::explain_layout(6).find("bit 14 mask 0x4000  x5x6"), std::string::npos);
}

TEST(CosetScan, GrayStepsFlipOneBit)
{
    for (std::uint64_t k = 1; k < (1U << 15); ++k) {
        const std::uint32_t d = rmcov::gray(k) ^ rmcov::gray(k - 1);
        ASSERT_EQ(std::popcount(d), 1);
        ASSERT_EQ(d, 1U << std::countr_zero(k));
    }
    std::vector<bool> hit(1U << 15, false);
    for (std::uint64_t k = 0; k < hit.size(); ++k) {
        hit[rmcov::gray(k)] = true;
    }
    EXPECT_TRUE(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
}

TEST(CosetScan, EnumerationCounts)
{
    const auto q6 = rmcov::enumerate_quadratics(6);
    EXPECT_EQ(q6.size(), 32768U);
    std::set<std::uint32_t> distinct;
    for (const auto& q : q6) {
        distinct.insert(q.coeffs());
    }
    EXPECT_EQ(distinct.size(), 32768U);

    std::uint64_t visited = 0;
    rmcov::scan_cosets(TruthTable(7), 0, std::uint64_t{1} << 21, [&](std::uint32_t, int) {
        ++visited;
        return true;
    });
    EXPECT_EQ(visited, 2097152U);
}

TEST(CosetScan, TableEntriesAreCosetNonlinearities)
{
    std::mt19937_64 rng(37);
    const auto f = from_bits(oracle::random_bits(6, rng), 6);
    const auto table = rmcov::coset_nl_table(f);
    ASSERT_EQ(table.size(), 32768U);
    for (std::uint32_t c = 0; c < table.size(); c += 131) {
        ASSERT_EQ(table[c], rmcov::nonlinearity(f ^ rmcov::quad_table(QuadraticForm(6, c))));
    }
}

TEST(SecondOrder, Nl2MatchesCodewordEnumerationSmallN)
{
    std::mt19937_64 rng(41);
    for (int n = 3; n <= 5; ++n) {
        std::vector<oracle::Bits> fs;
        for (int i = 0; i < 6; ++i) {
            fs.push_back(oracle::random_bits(n, rng));
        }
        const auto ref = oracle::nl2_by_codewords(fs, n);
        for (std::size_t i = 0; i < fs.size(); ++i) {
            EXPECT_EQ(rmcov::nl2(from_bits(fs[i], n)), ref[i]) << "n=" << n;
        }
    }
}

TEST(SecondOrder, Nl2MatchesRm26CodewordEnumeration)
{
    std::mt19937_64 rng(43);
    std::vector<oracle::Bits> fs = {oracle::eval_anf("123+145+246+356+456", 6), oracle::eval_anf(fixture_anfs()[0], 6),
                                    oracle::eval_anf(fixture_anfs()[6], 6)};
    while (fs.size() < 8) {
        fs.push_back(oracle::random_bits(6, rng));
    }
    const auto ref = oracle::nl2_by_codewords(fs, 6);
    EXPECT_EQ(ref[0], 18);
    for (std::size_t i = 0; i < fs.size(); ++i) {
        const auto f = from_bits(fs[i], 6);
        EXPECT_EQ(rmcov::nl2(f), ref[i]) << i;
        EXPECT_EQ(rmcov::nl2(f, 3), ref[i]) << i;
    }
}

TEST(SecondOrder, BoundedNl2StopsBelowFloor)
{
    const auto g0 = rmcov::from_anf(rmcov::parse_anf("123+145+246+356+456", 6));
    EXPECT_EQ(rmcov::nl2_bounded(g0, 10), 18);
    EXPECT_LT(rmcov::nl2_bounded(g0, 30), 30);
}

TEST(SecondOrder, NfhMatchesOracleHistogram)
{
    for (int i = 1; i <= 12; ++i) {
        const auto bits = oracle::eval_anf(fixture_anfs()[static_cast<std::size_t>(i - 1)], 6);
        const auto ref = oracle::nfh_histogram(bits, 6);
        const auto s = rmcov::nfh_spectrum(from_bits(bits, 6));
        ASSERT_EQ(s.counts.size(), ref.size());
        for (std::size_t r = 0; r < ref.size(); ++r) {
            EXPECT_EQ(s.counts[r], static_cast<std::uint64_t>(ref[r])) << "fun" << i << " r=" << r;
        }
        EXPECT_EQ(s.total(), 32768U);
    }
}

TEST(SecondOrder, NfhIsAffineInvariant)
{
    for (int i = 1; i <= 12; ++i) {
        const auto f = fixture(i);
        const auto base = rmcov::nfh_spectrum(f).counts;
        for (std::uint64_t s = 0; s < 20; ++s) {
            const auto g = rmcov::apply_affine(f, rmcov::random_affine(6, 1000 * i + s));
            ASSERT_EQ(rmcov::nfh_spectrum(g).counts, base) << "fun" << i << " map " << s;
        }
    }
}

TEST(SecondOrder, ThreadCountDoesNotChangeResults)
{
    const auto f = fixture(12);
    const auto t1 = rmcov::coset_nl_table(f, 1);
    for (unsigned threads : {2U, 3U, 7U}) {
        EXPECT_EQ(rmcov::coset_nl_table(f, threads), t1);
        EXPECT_EQ(rmcov::nfh_spectrum(f, threads).counts, rmcov::nfh_spectrum(f, 1).counts);
    }
}

TEST(SecondOrder, QuadraticNonlinearityClasses)
{
    const auto& table = rmcov::quadratic_nl_table();
    std::set<int> values(table.begin(), table.end());
    EXPECT_EQ(values, (std::set<int>{0, 16, 24, 28}));
    // cross-check the S16 predicate against the packed oracle
    const auto affine = oracle::affine_tables(6);
    const auto quads = oracle::quadratic_tables(6);
    int oracle16 = 0;
    for (auto q : quads) {
        oracle16 += oracle::nl_packed(q, affine) == 16;
    }
    const auto forms = rmcov::enumerate_quadratics(6);
    EXPECT_EQ(static_cast<int>(rmcov::s16_members(forms).size()), oracle16);
}

// Fh sets, S16 intersections and pair profiles recomputed on packed tables.
struct PackedSets {
    std::vector<unsigned __int128> affine = oracle::affine_tables(6);
    std::vector<unsigned __int128> quads = oracle::quadratic_tables(6);

    bool s16(unsigned __int128 q) const { return oracle::nl_packed(q, affine) == 16; }

    std::vector<unsigned __int128> fh(const std::string& anf, int r) const
    {
        const auto p = oracle::pack(oracle::eval_anf(anf, 6));
        std::vector<unsigned __int128> out;
        for (auto q : quads) {
            if (oracle::nl_packed(p ^ q, affine) == r) {
                out.push_back(q);
            }
        }
        return out;
    }

    int profile(const std::vector<unsigned __int128>& h, int t) const
    {
        int hits = 0;
        for (auto a : h) {
            int partners = 0;
            for (auto b : h) {
                partners += s16(a ^ b);
            }
            hits += partners >= t;
        }
        return hits;
    }
};

TEST(SecondOrder, S16CountsAndProfilesMatchOracle)
{
    const PackedSets o;
    const std::pair<int, int> cases[] = {{1, 16}, {2, 16}, {4, 26}, {7, 25}, {11, 25}};
    for (const auto& [i, r] : cases) {
        const auto& anf = fixture_anfs()[static_cast<std::size_t>(i - 1)];
        const auto ref = o.fh(anf, r);
        const auto set = rmcov::fh_set(fixture(i), r);
        ASSERT_EQ(set.members.size(), ref.size()) << anf;

        std::vector<unsigned __int128> ref_s16;
        std::copy_if(ref.begin(), ref.end(), std::back_inserter(ref_s16), [&](auto q) { return o.s16(q); });
        EXPECT_EQ(rmcov::s16_count(set), static_cast<int>(ref_s16.size())) << anf;

        const auto members = rmcov::s16_members(set.members);
        for (int t : {12, 13}) {
            EXPECT_EQ(rmcov::pair_profile(members, t), o.profile(ref_s16, t)) << anf << " t=" << t;
        }
    }
}

TEST(SecondOrder, ShiftedCountsMatchOracle)
{
    const PackedSets o;
    const auto& anf = fixture_anfs()[11];
    const auto ref = o.fh(anf, 25);
    const auto set = rmcov::fh_set(fixture(12), 25);
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 40; ++trial) {
        const std::uint32_t c = static_cast<std::uint32_t>(rng()) & 0x7FFF;
        const QuadraticForm g(6, c);
        oracle::Bits gbits(64, false);
        for (std::uint32_t x = 0; x < 64; ++x) {
            for (int i = 0; i < 6; ++i) {
                for (int j = i + 1; j < 6; ++j) {
                    gbits[x] = gbits[x] != (g.has(i, j) && ((x >> i) & 1U) && ((x >> j) & 1U));
                }
            }
        }
        const auto gt = oracle::pack(gbits);
        int expected = 0;
        std::vector<unsigned __int128> shifted;
        for (auto k : ref) {
            if (o.s16(gt ^ k)) {
                ++expected;
                shifted.push_back(gt ^ k);
            }
        }
        EXPECT_EQ(rmcov::shifted_s16_count(g, set), expected);
        EXPECT_EQ(rmcov::shifted_pair_profile(g, set.members, 12), o.profile(shifted, 12));
    }
}

TEST(SecondOrder, ConcatBoundIsTight)
{
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 2; ++trial) {
        const auto a = from_bits(oracle::random_bits(6, rng), 6);
        const auto b = from_bits(oracle::random_bits(6, rng), 6);
        const int bound = rmcov::concat_nl2_upper_bound(a, b);
        EXPECT_EQ(rmcov::nl2(rmcov::concat(a, b)), bound);
        EXPECT_EQ(rmcov::min_shifted_sum(rmcov::coset_nl_table(a), rmcov::coset_nl_table(b), 0), bound);
    }
    EXPECT_THROW((void)rmcov::concat_nl2_upper_bound(TruthTable(7), TruthTable(7)), std::invalid_argument);
}

TEST(SecondOrder, SixVariableOperationsRejectOtherSizes)
{
    EXPECT_THROW((void)rmcov::fh_set(TruthTable(5), 4), std::invalid_argument);
    EXPECT_THROW((void)rmcov::in_s16(QuadraticForm(5, 1)), std::invalid_argument);
}

} // namespace
