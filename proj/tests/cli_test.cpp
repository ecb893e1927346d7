#include "cli.hpp"

#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

namespace twohook::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(ParseGraphSpecTest, Examples) {
  EXPECT_TRUE(parse_graph_spec("", 5).extra_edges().empty());
  EXPECT_EQ(parse_graph_spec("2-5", 5).edges(),
            (PairSet{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 5}}));
  EXPECT_EQ(parse_graph_spec(" 1-3 , 2-5", 5).extra_edges(), (PairSet{{1, 3}, {2, 5}}));
  EXPECT_THROW(parse_graph_spec("4-4", 5), UsageError);
  EXPECT_THROW(parse_graph_spec("2-3", 5), UsageError);
  EXPECT_THROW(parse_graph_spec("1-9", 5), UsageError);
  EXPECT_THROW(parse_graph_spec("1-", 5), UsageError);
  EXPECT_THROW(parse_graph_spec("a-3", 5), UsageError);
  EXPECT_THROW(parse_graph_spec("1-3,", 5), UsageError);
  try {
    parse_graph_spec("1-3,x7", 5);
  } catch (const UsageError& e) {
    EXPECT_NE(std::string(e.what()).find("x7"), std::string::npos);
  }
}

TEST(ParseVectorTest, Examples) {
  EXPECT_EQ(parse_vector("4,2,3,1"), ExponentVector({4, 2, 3, 1}));
  EXPECT_EQ(parse_vector(" 3 "), ExponentVector({3}));
  EXPECT_THROW(parse_vector("4,,1"), UsageError);
  EXPECT_THROW(parse_vector("4;2"), UsageError);
}

TEST(CliExpandTest, PathFour) {
  const Outcome o = invoke({"expand", "--n", "4"});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_EQ(o.out,
            "{\"n\":4,\"terms\":[{\"partition\":[2,1,1,0],\"coeff\":1},"
            "{\"partition\":[1,1,1,1],\"coeff\":-2}]}\n");
}

TEST(CliExpandTest, BothMethodsAgree) {
  const Outcome o = invoke({"expand", "--n", "5", "--edges", "2-5", "--method", "both"});
  EXPECT_EQ(o.code, kExitOk);
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_TRUE(j["agree"].get<bool>());
  EXPECT_EQ(j["graph"]["extra_edges"], nlohmann::json::parse("[[2,5]]"));
}

TEST(CliExpandTest, MonomialWithZeros) {
  const Outcome o = invoke({"expand", "--n", "4", "--basis", "monomial", "--include-zeros"});
  EXPECT_EQ(o.code, kExitOk);
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["basis"], "monomial");
  ASSERT_EQ(j["terms"].size(), 5u);
  EXPECT_EQ(j["terms"][0]["partition"], nlohmann::json::parse("[4,0,0,0]"));
  EXPECT_EQ(j["terms"][0]["coeff"], 0);
  EXPECT_EQ(j["terms"][4]["coeff"], 1);
}

TEST(CliExpandTest, OutputIsDeterministic) {
  const std::vector<std::string> args{"expand", "--n", "6", "--edges", "1-4,2-6", "--method",
                                      "both"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
}

TEST(CliExpandTest, TextFormat) {
  const Outcome o = invoke({"expand", "--n", "3", "--format", "text"});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_NE(o.out.find("2 1 0"), std::string::npos);
  EXPECT_NE(o.out.find("-1"), std::string::npos);
}

TEST(CliExpandTest, Bounds) {
  EXPECT_EQ(invoke({"expand", "--n", "8"}).code, kExitUsage);
  EXPECT_EQ(invoke({"expand", "--n", "13", "--justify", "closure"}).code, kExitUsage);
  EXPECT_EQ(invoke({"expand", "--n", "2"}).code, kExitUsage);
  const Outcome closure = invoke({"expand", "--n", "8", "--justify", "closure"});
  EXPECT_EQ(closure.code, kExitOk);
  EXPECT_NE(closure.out.find("\"coeff\":-6"), std::string::npos);
}

TEST(CliExpandTest, UsageErrors) {
  const Outcome bad_flag = invoke({"expand", "--n", "4", "--bogus"});
  EXPECT_EQ(bad_flag.code, kExitUsage);
  EXPECT_FALSE(bad_flag.err.empty());
  EXPECT_EQ(invoke({"expand", "--n", "4", "--method", "magic"}).code, kExitUsage);
  EXPECT_EQ(invoke({"expand"}).code, kExitUsage);
  EXPECT_EQ(invoke({}).code, kExitUsage);
  const Outcome edge = invoke({"expand", "--n", "4", "--edges", "1-2"});
  EXPECT_EQ(edge.code, kExitUsage);
  EXPECT_NE(edge.err.find("1-2"), std::string::npos);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST(CliEnumerateTest, WithSolutions) {
  const Outcome o = invoke({"enumerate", "--n", "4", "--with-solutions"});
  EXPECT_EQ(o.code, kExitOk);
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["count"], 2);
  EXPECT_EQ(j["permutations"][1]["t"], nlohmann::json::parse("[4,2,3,1]"));
  EXPECT_EQ(j["permutations"][1]["solution"], nlohmann::json::parse("[[1,3],[2,4]]"));
  EXPECT_EQ(j["permutations"][1]["marks"], nlohmann::json::parse("[2]"));
  const auto plain = nlohmann::json::parse(invoke({"enumerate", "--n", "5"}).out);
  EXPECT_EQ(plain["count"], 6);
  EXPECT_FALSE(plain["permutations"][0].contains("solution"));
}

TEST(CliJustifyTest, BothReportsClosureGap) {
  const Outcome o = invoke({"justify", "--n", "4", "--t", "4,2,3,1", "--method", "both"});
  EXPECT_EQ(o.code, kExitOk);
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["sets"]["closure"].size(), 2u);
  EXPECT_EQ(j["sets"]["brute"].size(), 4u);
  EXPECT_FALSE(j["sets"]["agree_raw"].get<bool>());
  EXPECT_TRUE(j["sets"]["agree_after_filter"].get<bool>());
  EXPECT_EQ(j["sets"]["closure_missed"],
            nlohmann::json::parse("[[[1,3],[2,3],[3,4]],[[1,4],[2,3]]]"));
}

TEST(CliJustifyTest, Errors) {
  EXPECT_EQ(invoke({"justify", "--n", "4", "--t", "4,2,3"}).code, kExitUsage);
  EXPECT_EQ(invoke({"justify", "--n", "4", "--t", "4,3,3,1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"justify", "--n", "4", "--t", "4,2,x,1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"justify", "--n", "4", "--t", "4,2,3,1", "--method", "closure"}).code,
            kExitOk);
}

TEST(CliCountTest, RecurrenceTable) {
  const Outcome o = invoke({"count", "--n-max", "10", "--check-recurrence"});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_NE(o.out.find("2704"), std::string::npos);
  EXPECT_EQ(o.out.find("MISMATCH"), std::string::npos);
  const auto j = nlohmann::json::parse(
      invoke({"count", "--n-max", "6", "--check-recurrence", "--format", "json"}).out);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["rows"].size(), 4u);
  EXPECT_EQ(invoke({"count", "--n-max", "13"}).code, kExitUsage);
}

TEST(CliVerifyTest, DefaultRunPasses) {
  const Outcome o = invoke({"verify", "--n-max", "5", "--graphs", "random:2"});
  EXPECT_EQ(o.code, kExitOk) << o.out << o.err;
  EXPECT_EQ(o.out.find("FAIL"), std::string::npos);
  EXPECT_NE(o.out.find("checks passed"), std::string::npos);
}

TEST(CliVerifyTest, Errors) {
  EXPECT_EQ(invoke({"verify", "--graphs", "random"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--graphs", "star"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--n-max", "7"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--n-max", "9", "--allow-large"}).code, kExitUsage);
}

}  // namespace
}  // namespace twohook::cli
