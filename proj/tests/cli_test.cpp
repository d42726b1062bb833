#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rmcov/cli.hpp"

namespace {

using rmcov::cli::InputFormat;

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = rmcov::cli::main_entry(args, out, err);
    return {code, out.str(), err.str()};
}

TEST(ParseFunction, AnfWithExplicitN)
{
    const auto f = rmcov::cli::parse_function("126+135+234", InputFormat::anf, 6);
    EXPECT_EQ(f, rmcov::from_anf(rmcov::verify::fixture_anf("fun1")));
    EXPECT_EQ(rmcov::cli::parse_function("0", InputFormat::anf, 4), rmcov::TruthTable(4));
}

TEST(ParseFunction, NInference)
{
    EXPECT_EQ(rmcov::cli::parse_function("17", InputFormat::anf, 0).vars(), 7);
    EXPECT_THROW((void)rmcov::cli::parse_function("12", InputFormat::anf, 0), rmcov::cli::UsageError);
    EXPECT_EQ(rmcov::cli::parse_function("0123456789abcdef0123456789abcdef", InputFormat::hex, 0).vars(), 7);
    EXPECT_EQ(rmcov::cli::parse_function("0xe9", InputFormat::hex, 0).vars(), 3);
    EXPECT_EQ(rmcov::cli::parse_function("fun3", InputFormat::fixture, 0).vars(), 6);
    EXPECT_THROW((void)rmcov::cli::parse_function("fun3", InputFormat::fixture, 7), rmcov::cli::UsageError);
}

TEST(ParseFunction, Errors)
{
    EXPECT_THROW((void)rmcov::cli::parse_function("12+18", InputFormat::anf, 7), rmcov::cli::UsageError);
    EXPECT_THROW((void)rmcov::cli::parse_function("abc", InputFormat::hex, 0), rmcov::cli::UsageError);
    EXPECT_THROW((void)rmcov::cli::parse_function("ab", InputFormat::hex, 5), rmcov::cli::UsageError);
    EXPECT_THROW((void)rmcov::cli::parse_function("12", InputFormat::anf, 8), rmcov::cli::UsageError);
    EXPECT_THROW((void)rmcov::cli::parse_function("12", InputFormat::none, 6), rmcov::cli::UsageError);
    try {
        (void)rmcov::cli::parse_function("12+18", InputFormat::anf, 7);
    } catch (const rmcov::cli::UsageError& e) {
        EXPECT_NE(std::string(e.what()).find("position 4 ('8')"), std::string::npos) << e.what();
    }
}

TEST(ParseFunction, EmitThenParseIsIdentity)
{
    std::mt19937_64 rng(61);
    for (int n = 3; n <= 7; ++n) {
        for (int i = 0; i < 20; ++i) {
            const rmcov::TruthTable f(n, {rng(), rng()});
            const std::string anf = rmcov::format_anf(rmcov::to_anf(f));
            EXPECT_EQ(rmcov::cli::parse_function(anf, InputFormat::anf, n), f);
            EXPECT_EQ(rmcov::cli::parse_function(rmcov::format_hex(f), InputFormat::hex, 0), f);
        }
    }
}

TEST(Cli, Nl2OfG0)
{
    const auto r = run({"nl2", "--anf", "123+145+246+356+456", "-n", "6"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "18\n");
}

TEST(Cli, NfhOfFun1)
{
    const auto r = run({"nfh", "--fun", "fun1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("16 448\n"), std::string::npos);
    EXPECT_NE(r.out.find("28 64\n"), std::string::npos);
    const auto j = nlohmann::json::parse(run({"nfh", "--fun", "fun1", "--json"}).out);
    EXPECT_EQ(j["histogram"]["16"], 448);
    EXPECT_EQ(j["histogram"]["28"], 64);
    EXPECT_EQ(j["total"], 32768);
}

TEST(Cli, AnfAndSpectrum)
{
    auto r = run({"anf", "--hex", "e828488860a0c000"});
    EXPECT_EQ(r.out, "126+135+234\n");
    r = run({"spectrum", "--anf", "1", "-n", "3"});
    EXPECT_EQ(r.out, "0 8 0 0 0 0 0 0\n");
    r = run({"nl", "--anf", "12+34+56", "-n", "6"});
    EXPECT_EQ(r.out, "28\n");
    const auto j = nlohmann::json::parse(run({"anf", "--fun", "g0", "--json"}).out);
    EXPECT_EQ(j["schema_version"], rmcov::cli::kOutputSchemaVersion);
    EXPECT_EQ(j["verb"], "anf");
    EXPECT_EQ(j["degree"], 3);
    EXPECT_EQ(j["weight"], 18);
}

TEST(Cli, FhAndS16)
{
    auto r = run({"s16", "--fun", "fun2", "-r", "16"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "47\n");
    const auto j = nlohmann::json::parse(run({"fh", "--fun", "fun1", "-r", "28", "--json"}).out);
    EXPECT_EQ(j["count"], 64);
    EXPECT_EQ(j["members"].size(), 64U);
    EXPECT_EQ(run({"fh", "--fun", "fun1"}).code, 2);
    EXPECT_EQ(run({"fh", "--anf", "17", "-r", "3"}).code, 2);
}

TEST(Cli, BoundsAndLayout)
{
    auto r = run({"bounds"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("96"), std::string::npos);
    EXPECT_NE(r.out.find("460"), std::string::npos);
    r = run({"--explain-layout"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, rmcov::explain_layout(6));
    EXPECT_EQ(run({"explain-layout", "-n", "7"}).out, rmcov::explain_layout(7));
    EXPECT_EQ(run({"--explain-layout", "nl"}).code, 2);
}

TEST(Cli, UsageErrorsExitTwo)
{
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"nl"}).code, 2);
    EXPECT_EQ(run({"nl", "--anf", "12", "--fun", "fun1"}).code, 2);
    EXPECT_EQ(run({"nl", "--anf", "12"}).code, 2);
    EXPECT_EQ(run({"nl", "--anf", "1x", "-n", "4"}).code, 2);
    EXPECT_EQ(run({"nl", "--hex", "abc"}).code, 2);
    EXPECT_EQ(run({"nl", "--fun", "fun99"}).code, 2);
    EXPECT_EQ(run({"nl", "nl2", "--fun", "fun1"}).code, 2);
    EXPECT_EQ(run({"verify", "--check", "nonsense"}).code, 2);
    EXPECT_EQ(run({"verify", "--fixture", "fun1"}).code, 2);
    EXPECT_EQ(run({"verify", "--fixture", "fun1=129"}).code, 2);
    EXPECT_EQ(run({"witness", "--budget", "0"}).code, 2);
    EXPECT_EQ(run({"nl2", "--fun", "fun1", "--threads", "0"}).code, 2);
    const auto r = run({"nl", "--anf", "12"});
    EXPECT_NE(r.err.find("pass -n"), std::string::npos);
}

TEST(Cli, HelpExitsZero)
{
    const auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("verify"), std::string::npos);
}

TEST(Cli, VerifyExitCodes)
{
    auto r = run({"verify", "--check", "bounds", "--check", "nl2"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("verdict: PASS"), std::string::npos) << r.out;
    r = run({"verify", "--check", "nl2", "--fixture", "fun1=123+456", "--json", "--no-timing"});
    EXPECT_EQ(r.code, 1);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["verdict"], "fail");
    EXPECT_EQ(j["failing"], nlohmann::json::array({"nl2.fun1"}));
}

TEST(Cli, ThreadCountDoesNotChangeOutput)
{
    for (const std::string verb : {"nl2", "nfh"}) {
        const auto a = run({verb, "--fun", "fun11", "--json"});
        const auto b = run({verb, "--fun", "fun11", "--json", "--threads", "4"});
        EXPECT_EQ(a.out, b.out) << verb;
    }
    const auto a = run({"verify", "--check", "s16", "--json", "--no-timing"});
    const auto b = run({"verify", "--check", "s16", "--json", "--no-timing", "--threads", "3"});
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, WitnessVerb)
{
    const auto r = run({"witness", "--json"});
    EXPECT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["found"], true);
    EXPECT_EQ(j["nl2"], 40);
    EXPECT_EQ(j["function"]["hex"], "244ee288acc66a00e828488860a0c000");
    EXPECT_EQ(run({"witness", "--budget", "2"}).code, 1);
}

} // namespace
