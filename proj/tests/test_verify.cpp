#include "binconc/verify.hpp"

#include <gtest/gtest.h>

using namespace binconc;

TEST(Verify, TheoremSmallRange) {
  const auto r = verify_theorem(60);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.lines.size(), 180U);
  EXPECT_EQ(r.lines.front().json()["suite"], "theorem");
}

TEST(Verify, Chvatal) {
  const auto r = verify_chvatal(60);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.lines.size(), 59U);
}

TEST(Verify, BerryEsseenReportsPhiWidthAndPrintedMismatch) {
  const auto r = verify_berry_esseen(60);
  EXPECT_TRUE(r.ok());
  bool phi = false;
  for (const auto& l : r.lines) phi = phi || l.detail == "phi_width=0.68268949";
  EXPECT_TRUE(phi);
  ASSERT_EQ(r.notes.size(), 1U);
  EXPECT_NE(r.notes.front().find("0.37254609"), std::string::npos);
}

TEST(Verify, Cases) {
  const auto r = verify_cases(60);
  EXPECT_TRUE(r.ok());
  if (const auto* bad = r.first_failure()) ADD_FAILURE() << bad->jsonl();
}

TEST(Verify, Rademacher) {
  const auto r = verify_rademacher(500, 3);
  EXPECT_TRUE(r.ok());
}

TEST(Verify, FirstFailureAndJsonSchema) {
  SuiteResult r;
  r.lines.push_back({"x", "a", 1, std::nullopt, 1, 0, true, true, ""});
  r.lines.push_back({"x", "b", std::nullopt, 2, 0, 1, false, false, "why"});
  ASSERT_NE(r.first_failure(), nullptr);
  EXPECT_EQ(r.first_failure()->name, "b");
  EXPECT_EQ(r.lines[0].jsonl(), R"({"suite":"x","case":"a","n":1,"k":null,"lhs":1.0,"rhs":0.0,"ok":true,"mode":"exact"})");
  EXPECT_EQ(r.lines[1].json()["detail"], "why");
}
