#include <cstdlib>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "qleontief/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

std::string data(const std::string& name) { return std::string(QLEONTIEF_TEST_DATA) + "/" + name; }

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "qleontief");
  std::ostringstream out, err;
  const int code = qleontief::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(CliCheck, ExitCodes) {
  EXPECT_EQ(run({"check", data("min_4x4.json")}).code, 0);
  EXPECT_EQ(run({"check", data("classical_1_2.json")}).code, 0);
  EXPECT_EQ(run({"check", data("sum_2x2.json")}).code, 1);
  EXPECT_EQ(run({"check", data("truncated.json")}).code, 2);
  EXPECT_EQ(run({"check", data("missing.json")}).code, 2);
  EXPECT_EQ(run({"check"}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
}

TEST(CliCheck, SumWitnessAntichain) {
  const auto r = run({"check", data("sum_2x2.json"), "--json"});
  ASSERT_EQ(r.code, 1);
  const auto j = r.json();
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["command"], "check");
  EXPECT_EQ(j["verdict"], "fail");
  const auto& ql = j["certificates"][0];
  EXPECT_EQ(ql["property"], "quasi_leontief");
  EXPECT_EQ(ql["witnesses"], nlohmann::json::array({"(0,1)", "(1,0)"}));
}

TEST(CliCheck, IndividualPassGlobalFail) {
  const auto r = run({"check", data("min_x1_x1x2.json"), "--json"});
  EXPECT_EQ(r.code, 1);
  const auto report = r.json();
  bool individual = false;
  for (const auto& c : report["certificates"]) {
    if (c["property"] == "individually_quasi_leontief") individual = c["verdict"] == "pass";
    if (c["property"] == "quasi_leontief") EXPECT_EQ(c["verdict"], "fail");
  }
  EXPECT_TRUE(individual);
}

TEST(CliCheck, QuietPrintsNothing) {
  const auto r = run({"check", data("sum_2x2.json"), "--quiet"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(r.out.empty());
}

TEST(CliMaximize, Report) {
  const auto r = run({"maximize", data("min_4x4.json"), "--downset", data("downset_23.json"), "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto a = r.json()["argmax"];
  EXPECT_EQ(a["value"], "2");
  EXPECT_EQ(a["largest_efficient"], "(2,2)");
  EXPECT_EQ(a["maximizers"], nlohmann::json::array({"(2,2)", "(2,3)"}));
  EXPECT_EQ(r.json()["localization"]["verdict"], "pass");
  const auto two = run({"maximize", data("min_4x4.json"), "--downset", data("downset_23_31.json"), "--json"});
  EXPECT_EQ(two.json()["argmax"]["maximal_maximizer"], "(2,3)");
}

TEST(CliRefine, TraceAndPreconditions) {
  const auto r = run({"refine", data("min_4x4.json"), "--sets", data("s1_upto2.json"), data("s2_upto3.json"),
                      "--start", data("start_23.json"), "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto t = r.json()["trace"];
  EXPECT_EQ(t["result"], "(2,2)");
  EXPECT_EQ(t["checks"]["efficient"], true);
  const auto o = run({"refine", data("min_4x4.json"), "--sets", data("s1_upto2.json"), data("s2_upto3.json"),
                      "--order", "2,1", "--json"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.json()["trace"]["result"], "(2,2)");
  EXPECT_EQ(o.json()["trace"]["steps"][0]["axis"], 2);
  EXPECT_EQ(run({"refine", data("min_4x4.json"), "--sets", data("s1_upto2.json"), data("s2_upto3.json"), "--start",
                 data("start_13.json")})
                .code,
            1);
  EXPECT_EQ(run({"refine", data("min_4x4.json"), "--sets", data("s1_upto2.json")}).code, 2);
}

TEST(CliDecompose, Exact) {
  const auto r = run({"decompose", data("min_4x4.json"), "--upper", data("upper_33.json"), "--subset",
                      data("downset_23_31.json"), "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["exact"], true);
}

TEST(CliEfficient, ListsChain) {
  const auto r = run({"efficient", data("min_4x4.json"), "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, run({"efficient", data("min_4x4.json"), "--json"}).out);
}

TEST(CliCorpus, SummaryMutateAndEmpty) {
  const auto r = run({"corpus", "--n", "20", "--json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["inconsistencies"], 0);
  EXPECT_EQ(r.json()["suites"].size(), 4u);
  EXPECT_EQ(r.out, run({"corpus", "--n", "20", "--json"}).out);
  EXPECT_EQ(run({"corpus", "--n", "20", "--mutate"}).code, 1);
  const auto empty = run({"corpus", "--n", "0", "--json"});
  EXPECT_EQ(empty.code, 0);
  EXPECT_EQ(empty.json()["inconsistencies"], 0);
  EXPECT_EQ(run({"corpus", "--n", "-3"}).code, 2);
}

TEST(CliCorpus, SeedFromEnvironment) {
  ::setenv("QL_SEED", "7", 1);
  const auto env = run({"corpus", "--n", "2", "--json"});
  const auto flag = run({"corpus", "--n", "2", "--seed", "9", "--json"});
  ::unsetenv("QL_SEED");
  EXPECT_EQ(env.json()["seed"], 7);
  EXPECT_EQ(flag.json()["seed"], 9);
  EXPECT_EQ(run({"corpus", "--n", "2", "--json"}).json()["seed"], 42);
}
