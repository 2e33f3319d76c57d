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

#include "dnb/measures.hpp"

#include <gtest/gtest.h>

#include "dnb/position.hpp"

namespace dnb {
namespace {

int mod(int x, int m) { return ((x % m) + m) % m; }

TEST(MeasuresTest, TerminalBonus) {
  EXPECT_EQ(terminal_bonus(Position()), 0);
  EXPECT_EQ(terminal_bonus(parse("4l+8l")), 8);
  EXPECT_EQ(terminal_bonus(parse("3+4l+8l")), 6);
  EXPECT_EQ(terminal_bonus(parse("3+4")), 4);
  EXPECT_EQ(terminal_bonus(parse("3^4")), 4);
  EXPECT_EQ(terminal_bonus(parse("3+4+4l")), 4);
}

TEST(MeasuresTest, ControlledValue) {
  EXPECT_EQ(controlled_value(parse("3^5+4l+8l")), -3);
  EXPECT_EQ(controlled_value(parse("3+4l+8l")), 1);
  EXPECT_EQ(controlled_value(Position()), 0);
  // (12 - 4) + (10 - 8) + 4
  EXPECT_EQ(controlled_value(parse("12+10l")), 14);
}

TEST(MeasuresTest, FullMeasureSets) {
  MeasureSet ex1 = measures(parse("3^5+4l+8l"));
  EXPECT_EQ(ex1.size, 27);
  EXPECT_EQ(ex1.theta, 5);
  EXPECT_EQ(ex1.f, 1);
  EXPECT_EQ(ex1.s, 0);
  EXPECT_EQ(ex1.num_chains, 5);
  EXPECT_EQ(ex1.num_loops, 2);
  EXPECT_EQ(ex1.tb, 6);
  EXPECT_EQ(ex1.c, -3);

  MeasureSet sixes = measures(parse("6l^4"));
  EXPECT_EQ(sixes, (MeasureSet{24, 0, 0, 4, 0, 4, 8, 0}));

  MeasureSet three = measures(parse("3"));
  EXPECT_EQ(three.size, 3);
  EXPECT_EQ(three.theta, 1);
  EXPECT_EQ(three.tb, 4);
  EXPECT_EQ(three.c, 3);
}

TEST(MeasuresTest, RelationsOverAllSmallPositions) {
  for (const auto& p : enumerate_positions(26)) {
    const MeasureSet m = measures(p);
    ASSERT_EQ(m.c, controlled_value_by_excess(p)) << p.to_string();
    ASSERT_EQ(mod(m.c, 2), mod(m.size, 2)) << p.to_string();
    if (m.theta == 0) {
      ASSERT_EQ(mod(m.c, 4), mod(m.size, 4)) << p.to_string();
    }
    for (const auto& c : p.distinct()) {
      int tb = terminal_bonus(p.without(c));
      ASSERT_TRUE(tb == 0 || tb == 4 || tb == 6 || tb == 8);
    }
  }
}

}  // namespace
}  // namespace dnb
