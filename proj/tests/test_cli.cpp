#include "cli.hpp"

#include "json.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace circdet::cli {
namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "circdet");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

TEST(Cli, CoeffWorkedExample) {
    auto r = run({"coeff", "10", "0,0,1,1,1,1,3,7,8,8", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["coeff"], "200");
    EXPECT_EQ(doc["path"], "theorem3");
    EXPECT_EQ(doc["representative"], (std::vector<int>{0, 0, 0, 0, 1, 1, 3, 3, 4, 8}));
}

TEST(Cli, CoeffCheckAgrees) {
    auto r = run({"coeff", "7", "0,1,2,3,4,5,6", "--check", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["coeff"], "-105");
    for (const auto& [name, c] : doc["check"].items()) EXPECT_TRUE(c["agrees"].get<bool>()) << name;
    EXPECT_TRUE(doc["check"].contains("leibniz"));
}

TEST(Cli, CoeffGateAndMultiplicityInput) {
    auto gate = run({"coeff", "4", "0,0,1,2"});
    EXPECT_EQ(gate.code, 0);
    EXPECT_NE(gate.out.find("= 0"), std::string::npos);
    EXPECT_NE(gate.out.find("condition-gate"), std::string::npos);
    auto mult = run({"coeff", "8", "2,0,2,0,2,0,2,0", "--mult", "--format", "json"});
    ASSERT_EQ(mult.code, 0) << mult.err;
    EXPECT_EQ(nlohmann::json::parse(mult.out)["coeff"], "56");
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({"coeff", "4", "0,0,1,9"}).code, kUsageError);
    EXPECT_EQ(run({"coeff", "4", "0,0,1"}).code, kUsageError);
    EXPECT_EQ(run({"coeff", "4", "a,b"}).code, kUsageError);
    EXPECT_EQ(run({"coeff", "4", "2,2,0", "--mult"}).code, kUsageError);
    EXPECT_EQ(run({"expand", "0"}).code, kUsageError);
    EXPECT_EQ(run({"expand", "13"}).code, kUsageError);
    EXPECT_EQ(run({"expand", "6", "--max-n", "5"}).code, kUsageError);
    EXPECT_EQ(run({"expand", "3", "--format", "xml"}).code, kUsageError);
    EXPECT_EQ(run({"verify", "7..3"}).code, kUsageError);
    EXPECT_EQ(run({"verify", "3", "--suite", "nope"}).code, kUsageError);
    EXPECT_EQ(run({"frobnicate"}).code, kUsageError);
    EXPECT_EQ(run({}).code, kUsageError);
    EXPECT_EQ(run({"--help"}).code, kOk);
}

TEST(Cli, ExpandJsonSchemaAndRoundTrip) {
    auto r = run({"expand", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out,
              "{\"N\":3,\"terms\":[{\"M\":[0,0,3],\"coeff\":\"1\"},{\"M\":[0,3,0],\"coeff\":\"1\"},"
              "{\"M\":[1,1,1],\"coeff\":\"-3\"},{\"M\":[3,0,0],\"coeff\":\"1\"}]}\n");
    for (int N = 1; N <= 8; ++N) {
        auto e = run({"expand", std::to_string(N)});
        ASSERT_EQ(e.code, 0);
        EXPECT_EQ(nlohmann::json::parse(e.out).dump() + "\n", e.out) << N;
    }
}

TEST(Cli, ExpandZerosAndStrategies) {
    auto with = nlohmann::json::parse(run({"expand", "6", "--include-zeros"}).out);
    auto without = nlohmann::json::parse(run({"expand", "6", "--strategy", "direct"}).out);
    EXPECT_EQ(with["terms"].size(), 80u);
    EXPECT_EQ(without["terms"].size(), 68u);
}

TEST(Cli, ExpandText) {
    auto r = run({"expand", "3", "--format", "text"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "det[A,B,C] = A^3 + B^3 + C^3 - 3ABC");
    auto six = run({"expand", "6", "--format", "text"});
    EXPECT_NE(six.out.find("{C*_202020}_2"), std::string::npos);
    EXPECT_NE(six.out.find("C_{00aabc}"), std::string::npos);
}

TEST(Cli, ExpandCsv) {
    auto r = run({"expand", "3", "--format", "csv"});
    EXPECT_EQ(r.out, "M,coeff\n0 0 3,1\n0 3 0,1\n1 1 1,-3\n3 0 0,1\n");
}

TEST(Cli, Multiplets) {
    auto five = nlohmann::json::parse(run({"multiplets", "5", "--format", "json"}).out);
    EXPECT_EQ(five["additive_count"], 6);
    EXPECT_EQ(five["super_count"], 4);
    EXPECT_EQ(five["F"], "26");
    EXPECT_EQ(five["supermultiplet_formula"], "4");
    auto eight = nlohmann::json::parse(run({"multiplets", "8", "--format", "json"}).out);
    EXPECT_EQ(eight["super_count"], 49);
    EXPECT_FALSE(eight.contains("supermultiplet_formula"));
    auto two = nlohmann::json::parse(run({"multiplets", "2", "--format", "json"}).out);
    EXPECT_EQ(two["F"], "2");
    std::size_t members = 0;
    for (const auto& m : two["multiplets"])
        if (m["kind"] == "super") members += m["members"].size();
    EXPECT_EQ(members, 2u);
    EXPECT_NE(run({"multiplets", "5"}).out.find("F(N) = 26"), std::string::npos);
}

TEST(Cli, Zeros) {
    auto six = nlohmann::json::parse(run({"zeros", "6", "--format", "json"}).out);
    EXPECT_EQ(six["structural"], 12);
    EXPECT_EQ(six["accidental"], 0);
    auto ten = nlohmann::json::parse(run({"zeros", "10", "--format", "json"}).out);
    EXPECT_EQ(ten["structural"], 120);
    auto five = nlohmann::json::parse(run({"zeros", "5", "--format", "json"}).out);
    EXPECT_TRUE(five["zeros"].empty());
}

TEST(Cli, Verify) {
    auto oracle = run({"verify", "3..7", "--suite", "oracle"});
    EXPECT_EQ(oracle.code, 0) << oracle.out;
    auto ident = run({"verify", "6", "--suite", "identities"});
    EXPECT_EQ(ident.code, 0);
    EXPECT_NE(ident.out.find("det[1,...,1] = 0 skipped"), std::string::npos);
    EXPECT_NE(ident.out.find("det[0,1,...,1] = -5 checked"), std::string::npos);
    EXPECT_EQ(run({"verify", "5..7", "--suite", "lemmas"}).code, 0);
    auto all = nlohmann::json::parse(run({"verify", "4..6", "--format", "json"}).out);
    EXPECT_TRUE(all["passed"].get<bool>());
    EXPECT_EQ(all["results"].size(), 15u);
}

TEST(Cli, Bench) {
    auto r = run({"bench", "6..8"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "N,F,nonzero,direct_s,reduced_s,leibniz_s,kmod_q_s,per_coeff_us");
    std::vector<long> F;
    while (std::getline(in, line)) {
        auto first = line.find(','), second = line.find(',', first + 1);
        F.push_back(std::stol(line.substr(first + 1, second - first - 1)));
    }
    EXPECT_EQ(F, (std::vector<long>{80, 246, 810}));
}

TEST(Cli, RangeParsing) {
    EXPECT_EQ(parse_range("6"), std::make_pair(6, 6));
    EXPECT_EQ(parse_range("3..7"), std::make_pair(3, 7));
    EXPECT_THROW(parse_range("3-7"), std::invalid_argument);
    EXPECT_THROW(parse_range("..7"), std::invalid_argument);
}

}  // namespace
}  // namespace circdet::cli
