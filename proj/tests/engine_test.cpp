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

#include "dnb/engine.hpp"

#include <random>

#include <gtest/gtest.h>

#include "dnb/measures.hpp"
#include "dnb/oracle.hpp"

namespace dnb {
namespace {

int conserved_total(const GameState& s) {
  return s.boxes()[0] + s.boxes()[1] + s.remaining().size() +
         (s.pending() ? s.pending()->length() : 0);
}

TEST(EngineTest, NewGame) {
  GameState s = new_game(parse("12+10l"), 3);
  EXPECT_EQ(s.to_act(), ToAct::OpenerToOpen);
  EXPECT_EQ(s.opener(), 0);
  EXPECT_EQ(conserved_total(s), 22);
  EXPECT_EQ(s.prior_advantage(), 3);
  EXPECT_TRUE(s.transcript().empty());
  EXPECT_FALSE(s.terminal());

  EXPECT_EQ(new_game(parse("3+3"), 0).to_act(), ToAct::OpenerToOpen);
  EXPECT_THROW(new_game(Position(), 0), EmptyPosition);
}

TEST(EngineTest, LegalActions) {
  GameState s = new_game(parse("3+4l"), 0);
  EXPECT_EQ(legal_actions(s),
            (std::vector<Action>{Action::open(Component::chain(3)),
                                 Action::open(Component::loop(4))}));

  GameState opened = apply(new_game(parse("12+10l"), 0),
                           Action::open(Component::loop(10)));
  EXPECT_EQ(legal_actions(opened),
            (std::vector<Action>{Action::keep(), Action::give_up()}));

  GameState last = apply(new_game(parse("3"), 0),
                         Action::open(Component::chain(3)));
  EXPECT_TRUE(last.remaining().empty());
  EXPECT_EQ(legal_actions(last).size(), 2u);

  GameState over = apply(last, Action::keep());
  EXPECT_TRUE(over.terminal());
  EXPECT_EQ(over.boxes()[1], 1);
  EXPECT_EQ(over.boxes()[0], 2);
  EXPECT_THROW(legal_actions(over), IllegalAction);
}

TEST(EngineTest, RecordedLinesOfPlay) {
  const Position pos = parse("12+10l");
  GameState top = new_game(pos, 3)
                      .apply(Action::open(Component::loop(10)))
                      .apply(Action::keep());
  EXPECT_EQ(top.boxes()[1], 6);
  EXPECT_EQ(top.boxes()[0], 4);
  top = top.apply(Action::open(Component::chain(12))).apply(Action::give_up());
  EXPECT_TRUE(top.terminal());
  EXPECT_EQ(top.boxes()[1], 18);
  EXPECT_EQ(top.boxes()[0], 4);
  EXPECT_EQ(top.totals()[0], 7);

  GameState bottom = new_game(pos, 3)
                         .apply(Action::open(Component::chain(12)))
                         .apply(Action::keep())
                         .apply(Action::open(Component::loop(10)))
                         .apply(Action::give_up());
  EXPECT_EQ(bottom.boxes()[1], 20);
  EXPECT_EQ(bottom.totals()[0], 5);

  GameState single = new_game(parse("3"), 0)
                         .apply(Action::open(Component::chain(3)))
                         .apply(Action::give_up());
  EXPECT_TRUE(single.terminal());
  EXPECT_EQ(single.boxes()[1], 3);
  EXPECT_EQ(single.boxes()[0], 0);
}

TEST(EngineTest, IllegalActions) {
  GameState s = new_game(parse("3+4l"), 0);
  EXPECT_THROW(s.apply(Action::keep()), IllegalAction);
  EXPECT_THROW(s.apply(Action::give_up()), IllegalAction);
  EXPECT_THROW(s.apply(Action::open(Component::loop(6))), IllegalAction);
  GameState opened = s.apply(Action::open(Component::chain(3)));
  EXPECT_THROW(opened.apply(Action::open(Component::loop(4))), IllegalAction);
}

TEST(EngineTest, ParsesActions) {
  EXPECT_EQ(Action::parse("open 10l"), Action::open(Component::loop(10)));
  EXPECT_EQ(Action::parse(" Keep "), Action::keep());
  EXPECT_EQ(Action::parse("give_up"), Action::give_up());
  EXPECT_EQ(Action::parse("give"), Action::give_up());
  EXPECT_THROW(Action::parse("open 5l"), ParseError);
  EXPECT_THROW(Action::parse("pass"), ParseError);
}

// Random legal play: boxes are conserved and roles swap exactly on give-up.
TEST(EngineTest, RandomPlayInvariants) {
  std::mt19937 rng(20181126);
  auto all = enumerate_positions(22);
  for (int game = 0; game < 2000; ++game) {
    const Position& pos = all[rng() % all.size()];
    GameState s = new_game(pos, 0);
    while (!s.terminal()) {
      auto actions = s.legal_actions();
      const Action a = actions[rng() % actions.size()];
      GameState next = s.apply(a);
      ASSERT_EQ(conserved_total(next), pos.size());
      ASSERT_EQ(next.pending().has_value(),
                next.to_act() == ToAct::ControllerToRespond);
      if (a.type() == Action::Type::GiveUp) {
        ASSERT_NE(next.opener(), s.opener());
      } else {
        ASSERT_EQ(next.opener(), s.opener());
      }
      s = next;
    }
    ASSERT_TRUE(s.remaining().empty());
    ASSERT_EQ(replay(pos, 0, s.transcript()).boxes(), s.boxes());
  }
}

TEST(PlayoutTest, Examples) {
  EXPECT_EQ(playout(parse("12+10l"), PolicyKind::Optimal, PolicyKind::Optimal)
                .margin,
            14);
  auto ex1 = playout(parse("3^5+4l+8l"), PolicyKind::Optimal,
                     PolicyKind::Optimal);
  EXPECT_EQ(ex1.margin, 1);
  EXPECT_EQ(ex1.transcript.front(), Action::open(Component::chain(3)));
  EXPECT_THROW(playout(Position(), PolicyKind::Optimal, PolicyKind::Optimal),
               EmptyPosition);
}

TEST(PlayoutTest, OptimalPoliciesAchieveValue) {
  Oracle oracle;
  for (const auto& pos : enumerate_positions(18)) {
    const int v = oracle.value(pos);
    ASSERT_EQ(playout(pos, PolicyKind::Optimal, PolicyKind::Optimal).margin, v)
        << pos.to_string();
    ASSERT_EQ(
        playout(pos, PolicyKind::OracleOptimal, PolicyKind::Optimal).margin,
        v)
        << pos.to_string();
    ASSERT_EQ(
        playout(pos, PolicyKind::Optimal, PolicyKind::OracleOptimal).margin,
        v)
        << pos.to_string();
  }
}

TEST(PlayoutTest, BestResponseToCommittedControlGetsControlledValue) {
  for (const auto& pos : enumerate_positions(18)) {
    ASSERT_EQ(playout(pos, PolicyKind::OracleOptimal,
                      PolicyKind::CommittedControl)
                  .margin,
              controlled_value(pos))
        << pos.to_string();
  }
}

TEST(PlayoutTest, BothSearchingIsMinimax) {
  Oracle oracle;
  Match match(PolicyKind::OracleOptimal, PolicyKind::OracleOptimal);
  for (const auto& pos : enumerate_positions(16)) {
    ASSERT_EQ(match.run(pos).margin, oracle.value(pos)) << pos.to_string();
  }
}

}  // namespace
}  // namespace dnb
