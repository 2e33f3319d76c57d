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

// Turn-by-turn endgame play at component granularity.
//
// Player 0 starts as opener and player 1 as controller. The opener opens a
// component; the controller keeps control (hard-hearted handout) or gives it
// up, in which case the roles swap.

#ifndef DNB_ENGINE_HPP_
#define DNB_ENGINE_HPP_

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dnb/error.hpp"
#include "dnb/oracle.hpp"
#include "dnb/position.hpp"
#include "dnb/strategy.hpp"

namespace dnb {

enum class ToAct { OpenerToOpen, ControllerToRespond };

inline std::string_view to_string(ToAct t) {
  return t == ToAct::OpenerToOpen ? "opener_to_open" : "controller_to_respond";
}

class Action {
 public:
  enum class Type { Open, Keep, GiveUp };

  static Action open(Component c) { return Action(Type::Open, c); }
  static Action keep() { return Action(Type::Keep, std::nullopt); }
  static Action give_up() { return Action(Type::GiveUp, std::nullopt); }
  static Action respond(Response r) {
    return r == Response::Keep ? keep() : give_up();
  }

  // Accepts "open 10l", "keep", "give_up" (also "giveup", "give").
  static Action parse(std::string_view text) {
    std::string s(text);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
      s.pop_back();
    }
    std::size_t b = 0;
    while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    s = s.substr(b);
    for (auto& ch : s) ch = static_cast<char>(std::tolower(ch));
    if (s == "keep") return keep();
    if (s == "give_up" || s == "giveup" || s == "give" || s == "give up") {
      return give_up();
    }
    if (s.rfind("open", 0) == 0) return open(parse_component(s.substr(4)));
    throw ParseError("unrecognized action '" + std::string(text) + "'");
  }

  Type type() const { return type_; }
  const std::optional<Component>& component() const { return component_; }

  std::string to_string() const {
    switch (type_) {
      case Type::Open: return "open " + component_->to_string();
      case Type::Keep: return "keep";
      case Type::GiveUp: return "give_up";
    }
    return "?";
  }

  bool operator==(const Action&) const = default;

 private:
  Action(Type type, std::optional<Component> c) : type_(type), component_(c) {}

  Type type_;
  std::optional<Component> component_;
};

// Immutable game snapshot. Box counts cover the endgame only; the opening
// player's pre-endgame lead is carried separately as prior_advantage.
class GameState {
 public:
  static GameState start(const Position& pos, int prior_advantage) {
    if (pos.empty()) throw EmptyPosition();
    GameState s;
    s.initial_ = pos;
    s.remaining_ = pos;
    s.prior_advantage_ = prior_advantage;
    return s;
  }

  const Position& initial() const { return initial_; }
  const Position& remaining() const { return remaining_; }
  const std::optional<Component>& pending() const { return pending_; }
  ToAct to_act() const { return to_act_; }
  const std::array<int, 2>& boxes() const { return boxes_; }
  int opener() const { return opener_; }
  int controller() const { return 1 - opener_; }
  int prior_advantage() const { return prior_advantage_; }
  const std::vector<Action>& transcript() const { return transcript_; }

  bool terminal() const { return remaining_.empty() && !pending_; }

  int acting_player() const {
    return to_act_ == ToAct::OpenerToOpen ? opener_ : controller();
  }

  // Endgame boxes of the initial controller minus those of the initial
  // opener.
  int margin() const { return boxes_[1] - boxes_[0]; }

  // Whole-game totals, with the prior advantage credited to player 0.
  std::array<int, 2> totals() const {
    return {boxes_[0] + prior_advantage_, boxes_[1]};
  }

  std::vector<Action> legal_actions() const {
    if (terminal()) throw IllegalAction("game is over");
    std::vector<Action> out;
    if (to_act_ == ToAct::OpenerToOpen) {
      for (const auto& c : remaining_.distinct()) out.push_back(Action::open(c));
    } else {
      out.push_back(Action::keep());
      out.push_back(Action::give_up());
    }
    return out;
  }

  GameState apply(const Action& action) const {
    if (terminal()) throw IllegalAction("game is over");
    GameState next = *this;
    switch (action.type()) {
      case Action::Type::Open: {
        if (to_act_ != ToAct::OpenerToOpen) {
          throw IllegalAction("controller must respond to " +
                              pending_->to_string() + " first");
        }
        Component c = *action.component();
        if (!remaining_.contains(c)) {
          throw IllegalAction("component " + c.to_string() +
                              " is not in position " + remaining_.to_string());
        }
        next.remaining_ = remaining_.without(c);
        next.pending_ = c;
        next.to_act_ = ToAct::ControllerToRespond;
        break;
      }
      case Action::Type::Keep: {
        if (to_act_ != ToAct::ControllerToRespond) {
          throw IllegalAction("nothing has been opened");
        }
        int given = handout(*pending_);
        next.boxes_[controller()] += pending_->length() - given;
        next.boxes_[opener_] += given;
        next.pending_.reset();
        next.to_act_ = ToAct::OpenerToOpen;
        break;
      }
      case Action::Type::GiveUp: {
        if (to_act_ != ToAct::ControllerToRespond) {
          throw IllegalAction("nothing has been opened");
        }
        next.boxes_[controller()] += pending_->length();
        next.opener_ = controller();
        next.pending_.reset();
        next.to_act_ = ToAct::OpenerToOpen;
        break;
      }
    }
    next.transcript_.push_back(action);
    return next;
  }

 private:
  GameState() = default;

  Position initial_;
  Position remaining_;
  std::optional<Component> pending_;
  ToAct to_act_ = ToAct::OpenerToOpen;
  std::array<int, 2> boxes_{0, 0};
  int opener_ = 0;
  int prior_advantage_ = 0;
  std::vector<Action> transcript_;
};

inline GameState new_game(const Position& pos, int prior_advantage) {
  return GameState::start(pos, prior_advantage);
}

inline std::vector<Action> legal_actions(const GameState& state) {
  return state.legal_actions();
}

inline GameState apply(const GameState& state, const Action& action) {
  return state.apply(action);
}

// Rebuilds a state by replaying a transcript from its initial position.
inline GameState replay(const Position& pos, int prior_advantage,
                        const std::vector<Action>& transcript) {
  GameState s = new_game(pos, prior_advantage);
  for (const auto& a : transcript) s = s.apply(a);
  return s;
}

enum class PolicyKind {
  Optimal,           // closed-form opener and controller strategies
  CommittedControl,  // control strategy, publicly committed
  OracleOptimal,     // exhaustive search against the opposing policy
};

inline std::string_view to_string(PolicyKind k) {
  switch (k) {
    case PolicyKind::Optimal: return "optimal";
    case PolicyKind::CommittedControl: return "committed_control";
    case PolicyKind::OracleOptimal: return "oracle_optimal";
  }
  return "?";
}

inline PolicyKind parse_policy_kind(std::string_view name) {
  if (name == "optimal") return PolicyKind::Optimal;
  if (name == "committed_control" || name == "committed") {
    return PolicyKind::CommittedControl;
  }
  if (name == "oracle_optimal" || name == "oracle") {
    return PolicyKind::OracleOptimal;
  }
  throw ParseError("unknown policy '" + std::string(name) + "'");
}

// Action chosen by a non-searching policy. Each policy covers both roles
// since roles swap on give-up.
inline Action policy_action(PolicyKind kind, const GameState& s) {
  if (s.to_act() == ToAct::OpenerToOpen) {
    if (kind == PolicyKind::Optimal) {
      return Action::open(opener_move(s.remaining()).chosen);
    }
    // A committed controller only opens after giving up with 3-chains left.
    return Action::open(standard_move(s.remaining()));
  }
  const Component opened = *s.pending();
  const Position& rest = s.remaining();
  if (kind == PolicyKind::Optimal) {
    return Action::respond(controller_decision(rest, opened));
  }
  bool only_threes = std::all_of(
      rest.components().begin(), rest.components().end(),
      [](const Component& c) { return c.is_three_chain(); });
  if (rest.empty() || (opened.is_loop() && only_threes)) {
    return Action::give_up();
  }
  return Action::keep();
}

// Two policies facing each other. Searching policies pick the action that
// maximizes their own final margin given how the other seat plays; when
// both seats search this is plain minimax.
class Match {
 public:
  Match(PolicyKind player0, PolicyKind player1) : kinds_{player0, player1} {}

  Action choose(const GameState& s) {
    PolicyKind kind = kinds_[s.acting_player()];
    if (kind != PolicyKind::OracleOptimal) return policy_action(kind, s);
    return best_action(s).first;
  }

  // Remaining margin (player 1 minus player 0) from s under this match.
  int future(const GameState& s) {
    if (s.terminal()) return 0;
    Key key{s.remaining(), s.pending(), s.to_act(), s.opener()};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    int result;
    PolicyKind kind = kinds_[s.acting_player()];
    if (kind == PolicyKind::OracleOptimal) {
      result = best_action(s).second;
    } else {
      result = step_value(s, policy_action(kind, s));
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

  struct Result {
    int margin;  // initial controller minus initial opener
    GameState final_state;
  };

  Result run(const Position& pos, int prior_advantage = 0) {
    GameState s = new_game(pos, prior_advantage);
    while (!s.terminal()) s = s.apply(choose(s));
    return {s.margin(), s};
  }

 private:
  struct Key {
    Position remaining;
    std::optional<Component> pending;
    ToAct to_act;
    int opener;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      std::size_t h = std::hash<Position>{}(k.remaining);
      if (k.pending) h = h * 31 + std::hash<Component>{}(*k.pending) + 1;
      return h * 4 + static_cast<std::size_t>(k.to_act) * 2 +
             static_cast<std::size_t>(k.opener);
    }
  };

  int step_value(const GameState& s, const Action& a) {
    GameState next = s.apply(a);
    int gained = next.margin() - s.margin();
    return gained + future(next);
  }

  std::pair<Action, int> best_action(const GameState& s) {
    const int me = s.acting_player();
    std::optional<Action> best;
    int best_value = 0;
    for (const auto& a : s.legal_actions()) {
      int v = step_value(s, a);
      bool better = me == 1 ? v > best_value : v < best_value;
      if (!best || better) {
        best = a;
        best_value = v;
      }
    }
    return {*best, best_value};
  }

  std::array<PolicyKind, 2> kinds_;
  std::unordered_map<Key, int, KeyHash> memo_;
};

struct PlayoutResult {
  int margin;
  std::vector<Action> transcript;
};

// Plays pos to the end. The margin is reported from the initial
// controller's side.
inline PlayoutResult playout(const Position& pos, PolicyKind opener_policy,
                             PolicyKind controller_policy) {
  if (pos.empty()) throw EmptyPosition();
  Match match(opener_policy, controller_policy);
  auto result = match.run(pos);
  return {result.margin, result.final_state.transcript()};
}

}  // namespace dnb

#endif  // DNB_ENGINE_HPP_
