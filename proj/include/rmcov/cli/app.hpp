#pragma once

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rmcov/cli/command.hpp"

namespace rmcov::cli {

/// Builds a Command from argv. Throws UsageError on malformed invocations;
/// returns std::nullopt after printing help.
inline std::optional<Command> parse_args(const std::vector<std::string>& args, std::ostream& out)
{
    Command c;
    std::string anf;
    std::string hex;
    std::string fun;
    bool explain = false;

    CLI::App app{"Boolean function analysis and RM(2,7) covering radius verification", "rmcov"};
    app.require_subcommand(0, 1);

    auto add_common = [&](CLI::App* sub, bool with_input) {
        sub->add_flag("--json", c.json, "emit JSON");
        sub->add_option("--threads", c.threads, "worker threads for coset enumeration")->check(CLI::Range(1U, 256U));
        sub->add_option("-n", c.n, "number of variables (3..7)");
        if (with_input) {
            auto* a = sub->add_option("--anf", anf, "function as ANF, e.g. 126+135+234");
            auto* h = sub->add_option("--hex", hex, "function as hex truth table");
            auto* f = sub->add_option("--fun", fun, "built-in fixture fun1..fun12 or g0");
            a->excludes(h)->excludes(f);
            h->excludes(f);
        }
    };

    std::vector<CLI::App*> subs;
    for (const auto& verb : verbs()) {
        const bool input = verb != "verify" && verb != "witness" && verb != "bounds" && verb != "explain-layout";
        auto* sub = app.add_subcommand(verb);
        add_common(sub, input);
        if (verb == "fh" || verb == "s16") {
            sub->add_option("-r", c.r, "nonlinearity value r")->required();
        }
        if (verb == "verify" || verb == "witness") {
            sub->add_option("--seed", c.seed, "RNG seed");
            sub->add_option("--budget", c.budget, "witness search budget (candidates)");
        }
        if (verb == "verify") {
            sub->add_option("--trials", c.trials, "random concatenation trials");
            sub->add_option("--check", c.checks, "run only this check group (repeatable)");
            sub->add_option("--fixture", c.fixture_overrides, "override a fixture, NAME=ANF (repeatable)");
            sub->add_flag("--no-timing{false}", c.timing, "omit elapsed_ms for reproducible output");
        }
        subs.push_back(sub);
    }
    app.add_flag("--explain-layout", explain, "print the quadratic-form bit layout and exit");
    app.add_option("-n", c.n, "number of variables for --explain-layout");
    app.add_flag("--json", c.json, "emit JSON");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return std::nullopt;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    for (auto* sub : subs) {
        if (sub->parsed()) {
            c.verb = sub->get_name();
        }
    }
    if (explain) {
        if (!c.verb.empty() && c.verb != "explain-layout") {
            throw UsageError("--explain-layout takes no verb");
        }
        c.verb = "explain-layout";
    }
    if (c.verb.empty()) {
        throw UsageError("no verb given; try --help");
    }
    if (!anf.empty() || !hex.empty() || !fun.empty()) {
        c.format = !anf.empty() ? InputFormat::anf : !hex.empty() ? InputFormat::hex : InputFormat::fixture;
        c.input = !anf.empty() ? anf : !hex.empty() ? hex : fun;
    }
    return c;
}

/// Full entry point: parse, run, map errors to exit codes.
inline int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    try {
        const auto c = parse_args(args, out);
        if (!c) {
            return kExitOk;
        }
        return run(*c, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

} // namespace rmcov::cli
