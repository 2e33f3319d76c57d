// Copyright 2026 The dnb-endgame Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dnb/verify.hpp"

#include <gtest/gtest.h>

namespace dnb {
namespace {

TEST(VerifyTest, TinyBounds) {
  auto seven = check_equivalence(7);
  EXPECT_EQ(seven.positions_checked, 10);
  EXPECT_TRUE(seven.passed()) << summary(seven);

  auto two = check_equivalence(2);
  EXPECT_EQ(two.positions_checked, 0);
  EXPECT_TRUE(two.passed());
}

TEST(VerifyTest, ReportsAreDeterministic) {
  auto strip = [](nlohmann::json j) {
    j.erase("elapsed_ms");
    return j;
  };
  EXPECT_EQ(strip(to_json(check_equivalence(18))),
            strip(to_json(check_equivalence(18))));
  EXPECT_EQ(strip(to_json(check_sampled(7, 300, 120))),
            strip(to_json(check_sampled(7, 300, 120))));
}

TEST(VerifyTest, WorkedExamplesPass) {
  auto r = check_worked_examples();
  EXPECT_TRUE(r.passed()) << summary(r);
  EXPECT_GT(r.positions_checked, 60);
}

TEST(VerifyTest, InvariantsAndControlledValue) {
  Oracle oracle;
  auto inv = check_invariants(24, oracle);
  EXPECT_TRUE(inv.passed()) << summary(inv);
  auto cv = check_controlled_value(24, oracle);
  EXPECT_TRUE(cv.passed()) << summary(cv);
  EXPECT_EQ(inv.positions_checked, cv.positions_checked);
}

TEST(VerifyTest, SampledLargePositionsAgree) {
  auto r = check_sampled(42, 2000, 200);
  EXPECT_EQ(r.positions_checked, 2000);
  EXPECT_TRUE(r.passed()) << summary(r);
}

TEST(VerifyTest, FailuresAreReportedNotThrown) {
  VerifyReport r;
  r.family = "demo";
  r.expect_eq("3", "value", 3, 1);
  r.coverage["x"] = 0;
  EXPECT_FALSE(r.passed());
  auto j = to_json(r);
  EXPECT_EQ(j["failures"][0]["expected"], "3");
  EXPECT_EQ(j["failures"][0]["actual"], "1");
  EXPECT_EQ(j["passed"], false);
  EXPECT_EQ(r.uncovered(), std::vector<std::string>{"x"});
}

}  // namespace
}  // namespace dnb
