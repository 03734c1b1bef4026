#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "flatder/commands.hpp"

namespace flatder::cli {
namespace {

RunConfig config(std::string pattern, int n_min, int n_max) {
  RunConfig c;
  c.pattern = std::move(pattern);
  c.n_min = n_min;
  c.n_max = n_max;
  c.y = BigInt(1);
  return c;
}

TEST(Cli, ParsesEnumerations) {
  EXPECT_EQ(parse_method("series"), Method::series);
  EXPECT_FALSE(parse_method("magic"));
  EXPECT_EQ(method_name(Method::brute), "brute");
  EXPECT_EQ(parse_format("json"), Format::json);
  EXPECT_FALSE(parse_format("xml"));
}

TEST(Cli, DefaultMethod) {
  EXPECT_EQ(resolve_method("3-21", std::nullopt), Method::recurrence);
  EXPECT_EQ(resolve_method("2-13", std::nullopt), Method::brute);
  EXPECT_THROW(resolve_method("4-12", std::nullopt), UsageError);
}

TEST(Cli, TableCsv) {
  std::ostringstream out;
  EXPECT_EQ(cmd_table(config("3-21", 2, 10), out), kExitOk);
  EXPECT_EQ(out.str(),
            "pattern,n,value\n3-21,2,1\n3-21,3,2\n3-21,4,8\n3-21,5,31\n3-21,6,139\n3-21,7,673\n"
            "3-21,8,3521\n3-21,9,19690\n3-21,10,117026\n");
}

TEST(Cli, TableTrivialRows) {
  std::ostringstream out;
  cmd_table(config("1-23", 2, 10), out);
  const std::string text = out.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 10);
  EXPECT_EQ(text.find(",2\n"), std::string::npos);
  std::ostringstream single;
  cmd_table(config("13-2", 2, 2), single);
  EXPECT_EQ(single.str(), "pattern,n,value\n13-2,2,1\n");
}

TEST(Cli, TableJsonSchema) {
  RunConfig c = config("31-2", 2, 4);
  c.format = Format::json;
  std::ostringstream out;
  cmd_table(c, out);
  const auto doc = nlohmann::json::parse(out.str());
  EXPECT_EQ(doc["pattern"], "31-2");
  EXPECT_EQ(doc["method"], "recurrence");
  ASSERT_EQ(doc["rows"].size(), 3u);
  EXPECT_EQ(doc["rows"][2]["n"], 4);
  EXPECT_EQ(doc["rows"][2]["value"], "7");

  c.y.reset();
  std::ostringstream poly;
  cmd_table(c, poly);
  const auto pdoc = nlohmann::json::parse(poly.str());
  EXPECT_EQ(pdoc["rows"][2]["value"]["coeffs"], nlohmann::json::array({"0", "5", "2"}));
}

TEST(Cli, PolynomialCsvPadsColumns) {
  RunConfig c = config("3-12", 2, 4);
  c.y.reset();
  std::ostringstream out;
  cmd_table(c, out);
  EXPECT_EQ(out.str(), "pattern,n,y0,y1,y2\n3-12,2,0,1,0\n3-12,3,0,2,0\n3-12,4,0,5,2\n");
}

TEST(Cli, DistExamples) {
  RunConfig c = config("3-12", 4, 4);
  c.y.reset();
  c.format = Format::text;
  c.method = Method::brute;
  std::ostringstream a;
  cmd_dist(c, a);
  EXPECT_EQ(a.str(), "d_3-12(4) = 5y + 2y^2\n");

  c.pattern = "23-1";
  c.method = Method::formula;
  std::ostringstream b;
  cmd_dist(c, b);
  EXPECT_EQ(b.str(), "d_23-1(4) = 5y + 3y^2\n");

  for (Method m : {Method::brute, Method::recurrence, Method::formula, Method::series}) {
    EXPECT_TRUE(distribution("3-12", 1, m == Method::formula ? Method::brute : m, 1).is_zero());
  }
}

TEST(Cli, AllMethodsAgree) {
  for (const char* name : {"13-2", "31-2", "23-1", "32-1"}) {
    for (int n = 2; n <= 9; ++n) {
      const YPoly r = distribution(name, n, Method::recurrence, 1);
      EXPECT_EQ(distribution(name, n, Method::brute, 2), r);
      EXPECT_EQ(distribution(name, n, Method::formula, 1), r);
    }
  }
  for (const char* name : {"31-2", "21-3", "12-3", "3-12", "3-21"}) {
    for (int n = 2; n <= 9; ++n) {
      EXPECT_EQ(distribution(name, n, Method::series, 1), distribution(name, n, Method::recurrence, 1));
    }
  }
  for (int n = 3; n <= 12; ++n) {
    EXPECT_EQ(value_at("12-3", n, Method::formula, BigInt(1), 1),
              distribution("12-3", n, Method::recurrence, 1).evaluate(BigInt(1)));
  }
}

TEST(Cli, InvalidCombinationsAreUsageErrors) {
  EXPECT_THROW(distribution("2-13", 5, Method::recurrence, 1), UsageError);
  EXPECT_THROW(distribution("2-13", 5, Method::formula, 1), UsageError);
  EXPECT_THROW(distribution("1-23", 5, Method::series, 1), UsageError);
  EXPECT_THROW(distribution("3-12", kBruteMaxN + 1, Method::brute, 1), UsageError);
  EXPECT_THROW(distribution("12-3", 5, Method::formula, 1), UsageError);
  EXPECT_THROW(value_at("12-3", 5, Method::formula, BigInt(2), 1), UsageError);
  EXPECT_THROW(distribution("3-12", 0, Method::recurrence, 1), UsageError);
  RunConfig bad = config("3-12", 5, 3);
  std::ostringstream out;
  EXPECT_THROW(cmd_table(bad, out), UsageError);
}

TEST(Cli, Table1MatchesPublishedValues) {
  RunConfig c;
  c.format = Format::csv;
  std::ostringstream out;
  EXPECT_EQ(cmd_table1(c, out), kExitOk);
  EXPECT_NE(out.str().find("23-1/32-1,1,2,8,32,151,784,4467,27568,182820\n"), std::string::npos);
  EXPECT_NE(out.str().find("2-31,1,2,8,30,124,530,2341,10584,48761\n"), std::string::npos);
}

TEST(Cli, VerifyReportsEachCheck) {
  verify::Options options;
  options.m_max = 3;
  std::ostringstream out;
  EXPECT_EQ(cmd_verify(verify::Scope::identities, options, Format::text, out), kExitOk);
  EXPECT_NE(out.str().find("PASS alternating sum identity m=3  expected 8  actual 8"), std::string::npos);
  std::ostringstream json;
  cmd_verify(verify::Scope::identities, options, Format::json, json);
  const auto doc = nlohmann::json::parse(json.str());
  EXPECT_EQ(doc["failures"], 0);
  EXPECT_EQ(doc["checks"].size(), 14u);
}

TEST(Cli, OutputIsIndependentOfWorkerCount) {
  RunConfig c = config("2-31", 2, 9);
  c.y.reset();
  c.method = Method::brute;
  std::ostringstream one;
  cmd_table(c, one);
  c.workers = 3;
  std::ostringstream three;
  cmd_table(c, three);
  EXPECT_EQ(one.str(), three.str());
}

}  // namespace
}  // namespace flatder::cli
