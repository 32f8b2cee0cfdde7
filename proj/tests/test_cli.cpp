#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <cdunkl/cli/commands.hpp>
#include <cdunkl/cli/run_config.hpp>
#include <cdunkl/cli/suites.hpp>
#include <cdunkl/errors.hpp>

using namespace cdunkl;
using namespace cdunkl::cli;
using nlohmann::json;

namespace
{

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "cyclic-dunkl");
    std::vector<char *> argv;
    for (auto &a : args) {
        argv.push_back(a.data());
    }
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<json> json_lines(const std::string &text)
{
    std::vector<json> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        if (!line.empty()) {
            out.push_back(json::parse(line));
        }
    }
    return out;
}

std::vector<std::vector<std::string>> csv_rows(const std::string &text)
{
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        for (std::string cell; std::getline(ls, cell, ',');) {
            cells.push_back(cell);
        }
        rows.push_back(cells);
    }
    return rows;
}

} // namespace

TEST(RunConfig, ParseComplex)
{
    EXPECT_EQ(parse_complex("1.5"), complex(1.5, 0));
    EXPECT_EQ(parse_complex("-2i"), complex(0, -2));
    EXPECT_EQ(parse_complex("0.5+2i"), complex(0.5, 2));
    EXPECT_EQ(parse_complex("1e-3-4.5i"), complex(1e-3, -4.5));
    EXPECT_EQ(parse_complex("i"), complex(0, 1));
    EXPECT_EQ(parse_complex("-i"), complex(0, -1));
    EXPECT_EQ(parse_complex("2e+1+1e-1i"), complex(20, 0.1));
    EXPECT_THROW(parse_complex(""), ParameterError);
    EXPECT_THROW(parse_complex("abc"), ParameterError);
    EXPECT_THROW(parse_complex("1+2j"), ParameterError);
}

TEST(RunConfig, ParseGridAndLists)
{
    EXPECT_EQ(parse_grid("0:10:0.5").size(), 21u);
    EXPECT_EQ(parse_grid("0:0:1"), std::vector<complex>{complex(0)});
    const auto diag = parse_grid("0:1+1i:0.25+0.25i");
    ASSERT_EQ(diag.size(), 5u);
    EXPECT_NEAR(std::abs(diag.back() - complex(1, 1)), 0.0, 1e-15);
    EXPECT_THROW(parse_grid("0:1"), ParameterError);
    EXPECT_THROW(parse_grid("0:1:0"), ParameterError);
    EXPECT_THROW(parse_grid("0:1:-0.1"), ParameterError);
    EXPECT_EQ(parse_real_list("0.2, 0.4"), (std::vector<double>{0.2, 0.4}));
    EXPECT_THROW(parse_real_list("0.2,,0.4"), ParameterError);
}

TEST(RunConfig, Validation)
{
    RunConfig cfg;
    cfg.m = 3;
    cfg.nu = {0.2, 0.4};
    EXPECT_NO_THROW(validate(cfg, true));
    cfg.truncation = 5;
    EXPECT_THROW(validate(cfg, true), ParameterError);
    cfg.truncation = 60;
    cfg.tolerance = 0.0;
    EXPECT_THROW(validate(cfg, true), ParameterError);
    cfg.tolerance.reset();
    cfg.nu = {0.2};
    EXPECT_THROW(validate(cfg, true), ParameterError);
    EXPECT_NO_THROW(validate(cfg, false));
}

TEST(CliVerify, IntertwiningExample)
{
    const auto r = run({"verify", "--m", "2", "--nu", "0.5", "--suite", "intertwining", "--truncation", "60"});
    EXPECT_EQ(r.code, 0) << r.err;
    const auto lines = json_lines(r.out);
    ASSERT_FALSE(lines.empty());
    for (const auto &j : lines) {
        EXPECT_TRUE(j.at("pass").get<bool>()) << j.dump();
    }
    EXPECT_EQ(lines[0].at("identity"), "intertwining-theorem");
    EXPECT_LE(lines[0].at("max_residual").get<double>(), 1e-10);
    // Field order is part of the schema.
    std::vector<std::string> keys;
    const auto first = nlohmann::ordered_json::parse(r.out.substr(0, r.out.find('\n')));
    for (const auto &item : first.items()) {
        keys.push_back(item.key());
    }
    EXPECT_EQ(keys, (std::vector<std::string>{"identity", "m", "nu", "truncation", "max_residual", "tolerance", "pass",
                                              "status", "detail"}));
}

TEST(CliVerify, KernelSuiteReportsLiteralReadingAsDiscrepancy)
{
    const auto r = run({"verify", "--m", "3", "--nu", "0.2,0.4", "--suite", "kernel"});
    EXPECT_EQ(r.code, 0) << r.err;
    bool saw_literal = false;
    for (const auto &j : json_lines(r.out)) {
        if (j.at("identity") == "kernel-literal-reading") {
            saw_literal = true;
            EXPECT_EQ(j.at("status"), "discrepancy");
            EXPECT_TRUE(j.at("pass").get<bool>());
        } else {
            EXPECT_EQ(j.at("status"), "pass") << j.dump();
        }
        if (j.at("identity") == "kernel-closed-form") {
            EXPECT_LE(j.at("max_residual").get<double>(), 1e-12);
        }
    }
    EXPECT_TRUE(saw_literal);
}

TEST(CliVerify, NegativeWeightIsAStructuredUsageError)
{
    const auto r = run({"verify", "--m", "2", "--nu", "-0.75", "--suite", "eigen"});
    EXPECT_EQ(r.code, 2);
    const auto lines = json_lines(r.out);
    ASSERT_EQ(lines.size(), 1u);
    EXPECT_EQ(lines[0].at("error"), "parameter");
    const auto msg = lines[0].at("message").get<std::string>();
    EXPECT_NE(msg.find("denominator"), std::string::npos) << msg;
    EXPECT_NE(msg.find("k_1"), std::string::npos) << msg;
    EXPECT_FALSE(r.err.empty());
}

TEST(CliVerify, VanishingDenominatorNamesTheExponent)
{
    const auto r = run({"verify", "--m", "2", "--nu", "-1", "--suite", "eigen"});
    EXPECT_EQ(r.code, 2);
    const auto lines = json_lines(r.out);
    ASSERT_EQ(lines.size(), 1u);
    EXPECT_EQ(lines[0].at("error"), "singular-recursion");
    EXPECT_EQ(lines[0].at("index"), 1);
}

TEST(CliVerify, UsageErrors)
{
    EXPECT_EQ(run({"verify", "--m", "3", "--nu", "0.2"}).code, 2);
    EXPECT_EQ(run({"verify", "--m", "2", "--nu", "0.5", "--suite", "nope"}).code, 2);
    EXPECT_EQ(run({"verify", "--m", "2", "--nu", "0.5", "--truncation", "3"}).code, 2);
    EXPECT_EQ(run({"verify", "--m", "2", "--nu", "0.5", "--output", "xml"}).code, 2);
    EXPECT_EQ(run({"verify", "--m", "2", "--nu", "0.5", "--tolerance", "-1"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliVerify, FailingIdentityGivesExitOne)
{
    // A tolerance nothing can meet forces every nonzero residual to fail.
    const auto r = run({"verify", "--m", "3", "--nu", "0.2,0.4", "--suite", "intertwining", "--tolerance", "1e-300"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("FAILED"), std::string::npos);
}

TEST(CliVerify, Deterministic)
{
    const std::vector<std::string> args{"verify", "--m", "4", "--nu", "0.1,0.3,0.5", "--suite", "all", "--seed", "7"};
    const auto a = run(args);
    const auto b = run(args);
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    auto other = args;
    other.back() = "8";
    EXPECT_NE(run(other).out, a.out);
}

TEST(CliVerify, SuitesCoverEveryListedInvariant)
{
    // Each module invariant and the suite identity that checks it.
    const std::vector<std::pair<std::string, Suite>> expected{
        {"projection-idempotence-orthogonality", Suite::projections},
        {"projection-resolution-of-identity", Suite::projections},
        {"projection-shift-relation", Suite::projections},
        {"projection-definition-equivalence", Suite::projections},
        {"dunkl-monomial-rule-consistency", Suite::projections},
        {"dunkl-type-shift", Suite::projections},
        {"cosm-exp-decomposition", Suite::projections},
        {"hyper-bessel-factorization", Suite::intertwining},
        {"rl-intertwines-hyper-bessel", Suite::intertwining},
        {"intertwining-theorem", Suite::intertwining},
        {"kernel-from-intertwiner", Suite::eigen},
        {"eigen-residual", Suite::eigen},
        {"eigen-normalization", Suite::eigen},
        {"hyper-bessel-classical-m2", Suite::recurrences},
        {"hyper-bessel-ode", Suite::recurrences},
        {"recurrence-derivative", Suite::recurrences},
        {"recurrence-index-lowering/k=1", Suite::recurrences},
        {"series-error-estimate-soundness", Suite::recurrences},
        {"ek-monomial-identity", Suite::rl_crosscheck},
        {"rl-diagonal-vs-quadrature", Suite::rl_crosscheck},
        {"rl-classical-m2", Suite::rl_crosscheck},
        {"rl-maps-cosm-to-hyper-bessel", Suite::rl_crosscheck},
        {"kernel-decomposition", Suite::kernel},
        {"kernel-closed-form", Suite::kernel},
        {"kernel-literal-reading", Suite::kernel},
    };
    for (int m : {2, 3}) {
        RunConfig cfg;
        cfg.m = m;
        cfg.nu = m == 2 ? std::vector<double>{0.5} : std::vector<double>{0.2, 0.4};
        for (auto suite : concrete_suites()) {
            const auto reports = run_suite(cfg, suite);
            std::vector<std::string> emitted;
            for (const auto &r : reports) {
                emitted.push_back(r.identity);
            }
            EXPECT_EQ(emitted, suite_identities(suite, m)) << suite_name(suite);
        }
        const auto all = suite_identities(Suite::all, m);
        for (const auto &[id, suite] : expected) {
            const auto ids = suite_identities(suite, m);
            EXPECT_NE(std::find(ids.begin(), ids.end(), id), ids.end()) << id;
            EXPECT_NE(std::find(all.begin(), all.end(), id), all.end()) << id;
        }
        EXPECT_EQ(std::set<std::string>(all.begin(), all.end()).size(), all.size());
    }
}

TEST(CliEval, HyperBesselTable)
{
    const auto r = run({"eval", "--m", "2", "--nu", "0.5", "hyperbessel", "--grid", "0:10:0.5", "--output", "csv"});
    EXPECT_EQ(r.code, 0) << r.err;
    const auto rows = csv_rows(r.out);
    ASSERT_EQ(rows.size(), 22u);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"x_re", "x_im", "value_re", "value_im", "error_estimate", "terms_used",
                                                 "status"}));
    for (std::size_t i = 2; i < rows.size(); ++i) {
        const double x = std::stod(rows[i][0]);
        EXPECT_NEAR(std::stod(rows[i][2]), std::sin(x) / x, 1e-12);
        EXPECT_EQ(rows[i].back(), "ok");
    }
    const auto half_pi = run({"eval", "--m", "2", "--nu", "0.5", "hyperbessel", "--grid",
                              "1.5707963267948966:1.5707963267948966:1", "--output", "csv"});
    EXPECT_NEAR(std::stod(csv_rows(half_pi.out)[1][2]), 0.6366197724, 1e-10);
}

TEST(CliEval, CosmAtSinglePoint)
{
    const auto r = run({"eval", "--m", "4", "cosm", "--grid", "0:0:1"});
    EXPECT_EQ(r.code, 0) << r.err;
    const auto doc = json::parse(r.out);
    ASSERT_EQ(doc.at("rows").size(), 1u);
    EXPECT_EQ(doc["rows"][0]["value"][0].get<double>(), 1.0);
    EXPECT_EQ(doc["rows"][0]["value"][1].get<double>(), 0.0);
}

TEST(CliEval, KernelRowsCarryClosedFormAndDifference)
{
    const auto r = run({"eval", "--m", "3", "--nu", "0.2,0.4", "--lambda", "1.0", "kernel", "--grid", "0:2:0.25",
                        "--output", "csv"});
    EXPECT_EQ(r.code, 0) << r.err;
    const auto rows = csv_rows(r.out);
    ASSERT_EQ(rows.size(), 10u);
    EXPECT_EQ(rows[0][6], "closed_re");
    EXPECT_EQ(rows[0][8], "difference");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        EXPECT_LE(std::stod(rows[i][8]), 1e-12);
        EXPECT_NEAR(std::stod(rows[i][2]), std::stod(rows[i][6]), 1e-12);
    }
}

TEST(CliEval, SinmlAndComplexGrid)
{
    const auto r = run({"eval", "--m", "2", "sinml", "--l", "1", "--grid", "0:1i:0.5i"});
    EXPECT_EQ(r.code, 0) << r.err;
    const auto doc = json::parse(r.out);
    ASSERT_EQ(doc.at("rows").size(), 3u);
    // sin(i) = i sinh(1)
    EXPECT_NEAR(doc["rows"][2]["value"][1].get<double>(), std::sinh(1.0), 1e-14);
    EXPECT_EQ(run({"eval", "--m", "2", "sinml", "--l", "2", "--grid", "0:1:1"}).code, 2);
}

TEST(CliEval, RowErrorsDoNotAbortTable)
{
    const auto r = run({"eval", "--m", "2", "--nu", "-1", "hyperbessel", "--grid", "0:1:0.5", "--output", "csv"});
    EXPECT_EQ(r.code, 1);
    const auto rows = csv_rows(r.out);
    ASSERT_EQ(rows.size(), 4u);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        EXPECT_EQ(rows[i].back().rfind("error", 0), 0u);
    }
    EXPECT_EQ(run({"eval", "--m", "2", "nothing", "--grid", "0:1:1"}).code, 2);
    EXPECT_EQ(run({"eval", "--m", "2", "--nu", "0.5", "hyperbessel", "--grid", "0:1"}).code, 2);
}

TEST(CliSeries, EigenCoefficients)
{
    const auto r = run({"series", "--m", "2", "--nu", "0.5", "eigen", "--truncation", "6"});
    EXPECT_EQ(r.code, 0) << r.err;
    const auto doc = json::parse(r.out);
    EXPECT_EQ(doc.at("truncation"), 6);
    const auto &c = doc.at("coefficients");
    ASSERT_EQ(c.size(), 7u);
    EXPECT_EQ(c[0][0].get<double>(), 1.0);
    EXPECT_EQ(c[1][0].get<double>(), 0.0);
    EXPECT_NEAR(c[1][1].get<double>(), 1.0 / 3, 1e-16);

    const auto zero = json::parse(run({"series", "--m", "2", "--nu", "0.5", "--lambda", "0", "eigen"}).out);
    for (std::size_t n = 1; n < zero.at("coefficients").size(); ++n) {
        EXPECT_EQ(zero["coefficients"][n][0].get<double>(), 0.0);
        EXPECT_EQ(zero["coefficients"][n][1].get<double>(), 0.0);
    }
}

TEST(CliSeries, IntertwinedExponentialEqualsEigen)
{
    const std::vector<std::string> base{"--m", "3", "--nu", "0.2,0.4", "--lambda", "0.7-0.2i", "--truncation", "40"};
    auto eig = base, ie = base;
    eig.insert(eig.begin(), {"series", "eigen"});
    ie.insert(ie.begin(), {"series", "intertwined-exp"});
    const auto a = json::parse(run(eig).out).at("coefficients");
    const auto b = json::parse(run(ie).out).at("coefficients");
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t n = 0; n < a.size(); ++n) {
        const complex x(a[n][0].get<double>(), a[n][1].get<double>());
        const complex y(b[n][0].get<double>(), b[n][1].get<double>());
        EXPECT_LE(std::abs(x - y), 1e-12 * std::max({std::abs(x), std::abs(y), 1e-300}));
    }
}

TEST(CliSeries, MuDirectBypassesKappa)
{
    const auto doc = json::parse(run({"series", "--m", "2", "--nu", "0.5", "--lambda", "1", "--mu-direct", "eigen"}).out);
    EXPECT_NEAR(doc["coefficients"][1][0].get<double>(), 1.0 / 3, 1e-16);
    EXPECT_EQ(doc["coefficients"][1][1].get<double>(), 0.0);
    EXPECT_EQ(run({"series", "--m", "2", "--nu", "0.5", "bogus"}).code, 2);
}

TEST(CliCrosscheck, DiagonalAgreementAndConstant)
{
    const auto r = run({"crosscheck", "--m", "3", "--nu", "0.2,0.4"});
    EXPECT_EQ(r.code, 0) << r.err;
    const auto lines = json_lines(r.out);
    ASSERT_EQ(lines.size(), 11u);
    EXPECT_EQ(lines[9].at("identity"), "rl-diagonal-vs-quadrature");
    EXPECT_TRUE(lines[9].at("pass").get<bool>());
    EXPECT_NEAR(lines[10].at("normalization").at("ratio").get<double>(), 3.0, 1e-12);
    EXPECT_EQ(run({"crosscheck", "--m", "2", "--nu", "-0.5"}).code, 2);
    EXPECT_EQ(run({"crosscheck", "--m", "2", "--nu", "0.5", "--scheme", "simpson"}).code, 2);
}
