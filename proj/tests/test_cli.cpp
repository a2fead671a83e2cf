#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = mzi::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Compute) {
  EXPECT_EQ(run({"compute", "--graph6", "Bw"}).out, "Bw pi1=64 pi2=64\n");
  EXPECT_EQ(run({"compute", "--graph6", "Bg"}).out, "Bg pi1=4 pi2=4\n");
  const auto all = run({"compute", "--graph6", "Bg", "--all", "--format", "json"});
  EXPECT_EQ(all.code, 0);
  EXPECT_EQ(nlohmann::json::parse(all.out)[0]["m1"], "6");
  EXPECT_EQ(run({"compute", "--graph6", "@@"}).code, 2);
  EXPECT_EQ(run({"compute"}).code, 2);
}

TEST(Cli, ComputeFromFile) {
  const std::string path = testing::TempDir() + "mzi_cli_graphs.g6";
  std::ofstream(path) << "Bw\nBg\n";
  const auto r = run({"compute", "--file", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "Bw pi1=64 pi2=64\nBg pi1=4 pi2=4\n");
  std::remove(path.c_str());
  EXPECT_EQ(run({"compute", "--file", path}).code, 2);
}

TEST(Cli, Construct) {
  const auto knk = run({"construct", "--family", "knk", "--n", "5", "--k", "2"});
  EXPECT_EQ(knk.code, 0);
  const auto check = run({"compute", "--graph6", knk.out.substr(0, knk.out.size() - 1)});
  EXPECT_NE(check.out.find("pi1=82944"), std::string::npos);
  const auto gs = run({"construct", "--family", "gs", "--n", "6", "--p", "3"});
  EXPECT_EQ(gs.code, 0);
  EXPECT_EQ(run({"construct", "--family", "knk", "--n", "5", "--k", "5"}).code, 2);
  EXPECT_EQ(run({"construct", "--family", "nope", "--n", "5"}).code, 2);
  const auto a1 = run({"construct", "--family", "a1", "--n", "6", "--p", "3", "--legs", "2,2,1"});
  EXPECT_EQ(a1.code, 0);
  EXPECT_EQ(std::count(a1.out.begin(), a1.out.end(), '\n'), 1);
}

TEST(Cli, Extremal) {
  const auto max = run({"extremal", "--class", "vnk", "--n", "5", "--k", "2", "--index", "pi1",
                        "--direction", "max", "--jobs", "1"});
  EXPECT_EQ(max.code, 0);
  const auto j = nlohmann::json::parse(max.out);
  EXPECT_EQ(j["value"], "82944");
  EXPECT_EQ(j["witnesses"].size(), 1U);
  const auto min = run({"extremal", "--class", "gnp", "--n", "6", "--p", "3", "--index", "pi2",
                        "--direction", "min", "--format", "csv"});
  EXPECT_EQ(min.code, 0);
  EXPECT_NE(min.out.find(",432,"), std::string::npos);
  EXPECT_EQ(run({"extremal", "--class", "gnp", "--n", "4", "--p", "4"}).code, 2);
  EXPECT_EQ(run({"extremal", "--class", "vnk", "--n", "5", "--p", "2"}).code, 2);
  EXPECT_EQ(run({"extremal", "--class", "vnk", "--n", "12", "--k", "2"}).code, 2);
}

TEST(Cli, Verify) {
  EXPECT_EQ(run({"verify", "--suite", "bogus"}).code, 2);
  const auto lemmas =
      run({"verify", "--suite", "lemmas", "--n-max", "6", "--tree-n-max", "8", "--format", "json"});
  EXPECT_EQ(lemmas.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(lemmas.out).is_array());
  EXPECT_EQ(run({"verify", "--suite", "connectivity", "--n-max", "6"}).code, 0);
  EXPECT_EQ(run({"verify", "--suite", "pendant_min", "--n-max", "6"}).code, 0);
  EXPECT_EQ(run({"verify", "--suite", "all", "--n-max", "2", "--tree-n-max", "2"}).code, 0);
  // Pendant maximum with n - p = 2 is a genuine mismatch from n = 4 on.
  EXPECT_EQ(run({"verify", "--suite", "pendant_max", "--n-max", "5"}).code, 1);
  EXPECT_EQ(run({"verify", "--n-max", "40"}).code, 2);
}

TEST(Cli, VerifyWritesOutFile) {
  const std::string path = testing::TempDir() + "mzi_cli_reports.csv";
  const auto r = run({"verify", "--suite", "propositions", "--format", "csv", "--out", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header.rfind("suite,", 0), 0U);
  std::remove(path.c_str());
}

TEST(Cli, Enumerate) {
  const auto r = run({"enumerate", "--n", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 21);
  const auto t = run({"enumerate", "--n", "7", "--trees"});
  EXPECT_EQ(std::count(t.out.begin(), t.out.end(), '\n'), 11);
  EXPECT_EQ(run({"enumerate", "--n", "10"}).code, 2);
}

TEST(Cli, Usage) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}
