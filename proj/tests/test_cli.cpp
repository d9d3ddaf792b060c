#include <regex>
#include <sstream>

#include <gtest/gtest.h>

#include "antisym/cli.hpp"

namespace antisym {
namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string strip_elapsed(const std::string& json) {
    return std::regex_replace(json, std::regex(R"("elapsed_seconds":[-+0-9.eE]+)"), R"("elapsed_seconds":0)");
}

TEST(Cli, VerifySymbolic) {
    const auto r = run_cli({"verify", "--k", "3", "--mode", "symbolic"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("equal=true"), std::string::npos);
}

TEST(Cli, VerifyJsonSchema) {
    const auto r = run_cli({"verify", "--k", "2", "--json"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["command"], "verify");
    EXPECT_EQ(j["k"], 2);
    EXPECT_EQ(j["mode"], "symbolic");
    EXPECT_EQ(j["equal"], true);
    EXPECT_EQ(j["lhs_term_count"], 2);
    EXPECT_EQ(j["tool"], "antisym");
    EXPECT_TRUE(j.contains("version"));
    EXPECT_TRUE(j.contains("elapsed_seconds"));
    EXPECT_EQ(r.out.rfind(R"({"tool":"antisym","version":)", 0), 0U);
}

TEST(Cli, VerifyDefaultsToNumericAboveFour) {
    const auto r = run_cli({"verify", "--k", "5", "--trials", "2", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["mode"], "numeric");
    EXPECT_EQ(j["points_tested"], 2);
    EXPECT_EQ(j["seed"], 0);
    EXPECT_TRUE(j.contains("rng"));
}

TEST(Cli, LimitJson) {
    const auto r = run_cli({"limit", "--a", "1,2,3", "--json"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["a"], nlohmann::json({1, 2, 3}));
    EXPECT_EQ(j["lhs_limit"], "-1/180");
    EXPECT_EQ(j["rhs_limit"], "-1/180");
    EXPECT_EQ(j["equal"], true);

    const auto r12 = nlohmann::json::parse(run_cli({"limit", "--a", "1,2", "--json"}).out);
    EXPECT_EQ(r12["lhs_limit"], "-1/6");
    EXPECT_EQ(r12["rhs_limit"], "-1/6");
}

TEST(Cli, IntegralMonteCarlo) {
    const auto r = run_cli({"integral", "--a", "1,2", "--method", "mc", "--samples", "1000000", "--seed", "7", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["mc"]["estimate"].get<double>(), 1.0 / 6.0, 3 * j["mc"]["stderr"].get<double>());
    EXPECT_EQ(j["mc"]["samples"], 1000000);
    EXPECT_EQ(j["mc"]["seed"], 7);
    EXPECT_TRUE(j["mc"].contains("rng"));
}

TEST(Cli, IntegralAllJson) {
    const auto r = run_cli({"integral", "--a", "1,2", "--method", "all", "--samples", "20000", "--json"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["closed_form"], "-1/6");
    EXPECT_EQ(j["perm_sum"], "-1/6");
    EXPECT_EQ(j["nested"], "1/6");
    EXPECT_EQ(j["sign_factor"], -1);
    EXPECT_EQ(j["agree"], true);
    EXPECT_TRUE(j["mc"].contains("estimate"));
    EXPECT_TRUE(j["mc"].contains("stderr"));
}

TEST(Cli, IntegralRationalExponents) {
    const auto r = run_cli({"integral", "--a", "1/2,3/2", "--method", "closed", "--json"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["a"], nlohmann::json({"1/2", "3/2"}));
    EXPECT_EQ(j["closed_form"], "-2/3");
    EXPECT_FALSE(j.contains("nested"));
    EXPECT_EQ(run_cli({"integral", "--a", "1/2,3/2", "--method", "nested"}).code, 2);
}

TEST(Cli, FloatsCarryAtMostTwelveDigits) {
    EXPECT_EQ(cli::round12(1.0 / 3.0), 0.333333333333);
    const auto r = run_cli({"integral", "--a", "1,3", "--method", "mc", "--samples", "5000", "--json"});
    const auto j = nlohmann::json::parse(r.out);
    for (const char* field : {"estimate", "stderr"}) {
        const double v = j["mc"][field].get<double>();
        EXPECT_EQ(cli::round12(v), v) << field;
    }
    EXPECT_EQ(cli::round12(j["elapsed_seconds"].get<double>()), j["elapsed_seconds"].get<double>());
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run_cli({}).code, 2);
    EXPECT_EQ(run_cli({"verify"}).code, 2);
    EXPECT_EQ(run_cli({"verify", "--k", "0"}).code, 2);
    EXPECT_EQ(run_cli({"verify", "--k", "3", "--mode", "fuzzy"}).code, 2);
    EXPECT_EQ(run_cli({"verify", "--k", "6", "--mode", "symbolic"}).code, 2);
    EXPECT_EQ(run_cli({"limit", "--a", "1,0"}).code, 2);
    EXPECT_EQ(run_cli({"limit", "--a", "0.5"}).code, 2);
    EXPECT_EQ(run_cli({"integral", "--a", "1,2", "--method", "trapezoid"}).code, 2);
    const auto r = run_cli({"limit", "--a", "x"});
    EXPECT_EQ(r.code, 2);
    EXPECT_FALSE(r.err.empty());
    EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, BudgetOverride) {
    EXPECT_EQ(run_cli({"verify", "--k", "3", "--mode", "symbolic", "--max-symbolic-k", "2"}).code, 2);
    EXPECT_EQ(run_cli({"verify", "--k", "2", "--mode", "symbolic", "--max-symbolic-k", "2"}).code, 0);
}

TEST(Cli, BenchCsv) {
    const auto r = run_cli({"bench", "--max-k", "3", "--trials", "2"});
    ASSERT_EQ(r.code, 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line, "k,mode,terms,monomials,seconds");
    int rows = 0;
    long last_terms = 0;
    while (std::getline(lines, line)) {
        ++rows;
        const auto first = line.find(',');
        const auto second = line.find(',', first + 1);
        const auto third = line.find(',', second + 1);
        const long terms = std::stol(line.substr(second + 1, third - second - 1));
        EXPECT_GE(terms, last_terms);
        last_terms = terms;
    }
    EXPECT_GE(rows, 3);
    EXPECT_EQ(r.out.find('\r'), std::string::npos);
}

TEST(Cli, BenchRespectsSymbolicBudget) {
    const auto r = run_cli({"bench", "--max-k", "5", "--max-symbolic-k", "3", "--trials", "1"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("3,symbolic,6,"), std::string::npos);
    EXPECT_EQ(r.out.find("4,symbolic"), std::string::npos);
    EXPECT_NE(r.out.find("5,numeric,120,"), std::string::npos);
}

TEST(Cli, DeterministicJson) {
    const std::vector<std::vector<std::string>> commands{
        {"verify", "--k", "4", "--mode", "symbolic", "--json"},
        {"verify", "--k", "6", "--mode", "numeric", "--trials", "3", "--seed", "11", "--json"},
        {"limit", "--a", "3,1,4,5", "--json"},
        {"integral", "--a", "1,2,4", "--method", "all", "--samples", "30000", "--seed", "5", "--json"},
    };
    for (const auto& cmd : commands) {
        std::string reference;
        for (const char* workers : {"1", "2", "5"}) {
            auto args = cmd;
            args.push_back("--workers");
            args.push_back(workers);
            const auto r = run_cli(args);
            ASSERT_EQ(r.code, 0);
            const auto text = strip_elapsed(r.out);
            if (reference.empty()) {
                reference = text;
            } else {
                EXPECT_EQ(text, reference) << cmd.front() << " workers=" << workers;
            }
        }
    }
}

} // namespace
} // namespace antisym
