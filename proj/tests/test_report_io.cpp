#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "mzi/report_io.hpp"

using namespace mzi;

TEST(ReportIo, VerificationJsonSchema) {
  const auto r = verify_connectivity_max(5, 2, ClassKind::kVertexConnectivity);
  const auto j = nlohmann::json::parse(to_json(r));
  for (const char* key : {"suite", "params", "status", "expected", "observed", "witnesses",
                          "class_size", "runtime_ms"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["status"], "verified");
  EXPECT_EQ(j["params"]["n"], 5);
  EXPECT_EQ(j["params"]["k"], 2);
  EXPECT_TRUE(j["params"]["p"].is_null());
  EXPECT_TRUE(j["runtime_ms"].is_null());
  EXPECT_EQ(j["observed"]["pi1_max"], "82944");
  EXPECT_EQ(j["witnesses"]["pi1_max"].size(), 1U);
}

TEST(ReportIo, ExtremalJson) {
  const auto r = extremal_search(ClassConstraint::pendants(6, 3), Index::kPi2, Direction::kMin);
  const auto j = nlohmann::json::parse(to_json(r));
  EXPECT_EQ(j["value"], "432");
  EXPECT_EQ(j["class"], "gnp");
  EXPECT_EQ(j["witnesses"].size(), r.witnesses.size());
}

TEST(ReportIo, Csv) {
  VerificationReport r;
  r.suite = "x";
  r.params.n = 4;
  r.details = "a, \"b\"";
  std::ostringstream out;
  write_csv(out, std::vector<VerificationReport>{r});
  EXPECT_EQ(out.str(),
            "suite,n,k,p,n_max,kind,m,status,class_size,instances,details\n"
            "x,4,,,,,,verified,0,0,\"a, \"\"b\"\"\"\n");
}
