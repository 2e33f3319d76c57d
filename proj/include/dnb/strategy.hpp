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

// Closed-form strategy and values for loop-and-long-chain endgames. Nothing
// here searches the game tree; every function looks only at the position.

#ifndef DNB_STRATEGY_HPP_
#define DNB_STRATEGY_HPP_

#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dnb/error.hpp"
#include "dnb/measures.hpp"
#include "dnb/position.hpp"

namespace dnb {

enum class Response { Keep, GiveUp };

inline std::string_view to_string(Response r) {
  return r == Response::Keep ? "keep" : "give_up";
}

// Which opener rule produced a move.
enum class OpenerRule {
  ThreeChainPlusLoops,   // c >= 2 and G = 3 + loops: shortest loop
  FourLoopSmallControl,  // c in {-1,0,1}, G = 4l + H, H != 3+3+3: the 4-loop
  FourLoopThreeChain,    // c <= -2, G = 4l + 3 + H, 4 | size(H), no 3s in H
  StandardMove,
};

enum class StandardReason { ThreeChain, ShortestLoop, ShortestChain };

inline std::string_view to_string(OpenerRule rule) {
  switch (rule) {
    case OpenerRule::ThreeChainPlusLoops: return "three_chain_plus_loops";
    case OpenerRule::FourLoopSmallControl: return "four_loop_small_control";
    case OpenerRule::FourLoopThreeChain: return "four_loop_three_chain";
    case OpenerRule::StandardMove: return "standard_move";
  }
  return "?";
}

inline std::string_view to_string(StandardReason reason) {
  switch (reason) {
    case StandardReason::ThreeChain: return "three_chain";
    case StandardReason::ShortestLoop: return "shortest_loop";
    case StandardReason::ShortestChain: return "shortest_chain";
  }
  return "?";
}

// Human-readable rule, e.g. "standard move" or "shortest loop, |c| <= 1".
inline std::string describe(OpenerRule rule) {
  switch (rule) {
    case OpenerRule::ThreeChainPlusLoops:
      return "shortest loop: one 3-chain plus loops with c >= 2";
    case OpenerRule::FourLoopSmallControl:
      return "shortest loop: 4-loop present with |c| <= 1";
    case OpenerRule::FourLoopThreeChain:
      return "shortest loop: 4-loop + 3-chain + rest of size 0 mod 4, c <= -2";
    case OpenerRule::StandardMove:
      return "standard move";
  }
  return "?";
}

struct OpenerRationale {
  Component chosen;
  OpenerRule rule;
  std::optional<StandardReason> standard_reason;
};

namespace detail {

inline int mod(int x, int m) { return ((x % m) + m) % m; }

inline std::optional<Component> shortest_loop(const Position& pos) {
  for (const auto& c : pos.components()) {
    if (c.is_loop()) return c;
  }
  return std::nullopt;
}

inline Position three_threes() {
  return Position(std::vector<Component>(3, Component::chain(3)));
}

// G = 4l + (anything except `exception`).
inline bool four_loop_plus_except(const Position& pos,
                                  const Position& exception) {
  Component four = Component::loop(4);
  return pos.contains(four) && pos.without(four) != exception;
}

}  // namespace detail

// Open a 3-chain if present, otherwise a shortest loop, otherwise a shortest
// chain.
inline Component standard_move(const Position& pos,
                               StandardReason* reason = nullptr) {
  if (pos.empty()) throw EmptyPosition();
  auto set = [&](StandardReason r) {
    if (reason) *reason = r;
  };
  Component three = Component::chain(3);
  if (pos.contains(three)) {
    set(StandardReason::ThreeChain);
    return three;
  }
  if (auto loop = detail::shortest_loop(pos)) {
    set(StandardReason::ShortestLoop);
    return *loop;
  }
  set(StandardReason::ShortestChain);
  return pos.components().front();
}

// Optimal move for the player who must open a component.
inline OpenerRationale opener_move(const Position& pos) {
  if (pos.empty()) throw EmptyPosition();
  const MeasureSet m = measures(pos);
  auto loop = detail::shortest_loop(pos);

  if (m.c >= 2 && m.theta == 1 && m.num_chains == 1 && m.num_loops >= 1) {
    return {*loop, OpenerRule::ThreeChainPlusLoops, std::nullopt};
  }
  if (m.c >= -1 && m.c <= 1 &&
      detail::four_loop_plus_except(pos, detail::three_threes())) {
    return {*loop, OpenerRule::FourLoopSmallControl, std::nullopt};
  }
  if (m.c <= -2 && m.f >= 1 && m.theta == 1 &&
      detail::mod(m.size - 4 - 3, 4) == 0) {
    return {*loop, OpenerRule::FourLoopThreeChain, std::nullopt};
  }
  StandardReason reason{};
  Component chosen = standard_move(pos, &reason);
  return {chosen, OpenerRule::StandardMove, reason};
}

// True iff v(G) > 2, decided from c, f, the 3-chain count and size alone.
inline bool value_exceeds_two(const Position& pos) {
  if (pos.empty()) return false;
  const MeasureSet m = measures(pos);
  if (m.c > 2) return true;
  bool shape = (m.theta == 1 && detail::mod(m.size, 4) == 3) ||
               (m.theta == 0 && detail::mod(m.size, 4) != 2);
  if (!shape) return false;
  int r = detail::mod(m.c, 8);
  bool large = m.c + 4 * m.f > 2 && (r == 3 || r == 5 || r == 4);
  bool small = m.c + 4 * m.f < 2 && m.f % 2 == 0;
  return large || small;
}

// Controller's reply once `opened` has been opened, leaving `remainder`.
inline Response controller_decision(const Position& remainder,
                                    Component opened) {
  if (opened.is_loop()) {
    return controlled_value(remainder) > 4 ? Response::Keep
                                           : Response::GiveUp;
  }
  return value_exceeds_two(remainder) ? Response::Keep : Response::GiveUp;
}

enum class ExplicitCase {
  LargeControlledValue,  // c >= 2
  ZeroWithFourLoop,      // c = 0, G = 4l + (not 3+3)
  SmallLargeExcess,      // theta <= 1 shape, c + 4f >= 2
  SmallOdd,              // theta <= 1 shape, c + 4f < 2, size odd
  SmallTwoMod4,          // ... size = 2 mod 4
  SmallZeroMod4,         // ... size = 0 mod 4
  Generic,               // everything else: 1 or 2 by parity
};

inline constexpr int kExplicitCaseCount = 7;

inline std::string_view to_string(ExplicitCase c) {
  switch (c) {
    case ExplicitCase::LargeControlledValue: return "large_controlled_value";
    case ExplicitCase::ZeroWithFourLoop: return "zero_with_four_loop";
    case ExplicitCase::SmallLargeExcess: return "small_c_plus_4f_at_least_2";
    case ExplicitCase::SmallOdd: return "small_odd";
    case ExplicitCase::SmallTwoMod4: return "small_size_2_mod_4";
    case ExplicitCase::SmallZeroMod4: return "small_size_0_mod_4";
    case ExplicitCase::Generic: return "generic_parity";
  }
  return "?";
}

struct ExplicitValue {
  int value;
  ExplicitCase which;
};

namespace detail {

// theta = 0, or theta = 1 with size = 3 mod 4.
inline bool few_threes_shape(const MeasureSet& m) {
  return m.theta == 0 || (m.theta == 1 && mod(m.size, 4) == 3);
}

inline Position three_three() {
  return Position{Component::chain(3), Component::chain(3)};
}

}  // namespace detail

// Value from the first applicable case of a fixed, priority-ordered list.
inline ExplicitValue value_explicit_detail(const Position& pos) {
  if (pos.empty()) throw EmptyPosition();
  const MeasureSet m = measures(pos);
  const bool odd = m.size % 2 != 0;

  if (m.c >= 2) return {m.c, ExplicitCase::LargeControlledValue};
  if (m.c == 0 && detail::four_loop_plus_except(pos, detail::three_three())) {
    return {0, ExplicitCase::ZeroWithFourLoop};
  }
  if (detail::few_threes_shape(m)) {
    if (m.c + 4 * m.f >= 2) {
      static constexpr int kByResidue[8] = {0, 1, 2, 3, 4, 3, 2, 1};
      return {kByResidue[detail::mod(m.c, 8)], ExplicitCase::SmallLargeExcess};
    }
    if (odd) return {m.f % 2 != 0 ? 1 : 3, ExplicitCase::SmallOdd};
    if (detail::mod(m.size, 4) == 2) return {2, ExplicitCase::SmallTwoMod4};
    return {m.f % 2 != 0 ? 0 : 4, ExplicitCase::SmallZeroMod4};
  }
  return {odd ? 1 : 2, ExplicitCase::Generic};
}

inline int value_explicit(const Position& pos) {
  return value_explicit_detail(pos).value;
}

// The core: all loops of length >= 8, plus all chains of length >= 4 if
// there are any, else the lone 3-chain if it is the only chain.
struct CoreDecomposition {
  Position core;
  int theta_prime = 0;  // 3-chains outside the core (0 or 1)
  int s_outside = 0;    // 6-loops outside the core
  int f_outside = 0;    // 4-loops outside the core
};

inline CoreDecomposition core(const Position& pos) {
  const MeasureSet m = measures(pos);
  if (m.theta > 1) {
    throw PreconditionViolation("core needs at most one 3-chain, got " +
                                std::to_string(m.theta) + " in " +
                                pos.to_string());
  }
  const bool long_chains = m.num_chains > m.theta;
  std::vector<Component> kept;
  for (const auto& c : pos.components()) {
    if (c.is_loop() ? c.length() >= 8
                    : (long_chains ? c.length() >= 4 : true)) {
      kept.push_back(c);
    }
  }
  CoreDecomposition out;
  out.core = Position(std::move(kept));
  const MeasureSet in_core = measures(out.core);
  out.theta_prime = m.theta - in_core.theta;
  out.s_outside = m.s;
  out.f_outside = m.f;
  return out;
}

// Reflect-or-step maps applied while adjoining 6-loops, the 3-chain and
// 4-loops to the core.
inline int sigma(int x) { return std::abs(x - 4) + 2; }
inline int theta_op(int x) { return x - 1; }
inline int phi(int x) { return std::abs(x - 4); }

enum class ProceduralCase {
  LargeControlledValue,
  ZeroWithFourLoop,
  CoreOperators,
  ParityFallback,
};

inline constexpr int kProceduralCaseCount = 4;

inline std::string_view to_string(ProceduralCase c) {
  switch (c) {
    case ProceduralCase::LargeControlledValue: return "large_controlled_value";
    case ProceduralCase::ZeroWithFourLoop: return "zero_with_four_loop";
    case ProceduralCase::CoreOperators: return "core_operators";
    case ProceduralCase::ParityFallback: return "parity_fallback";
  }
  return "?";
}

struct ProceduralTrace {
  CoreDecomposition core;
  int core_value = 0;   // c(core)
  int after_sigma = 0;  // after one step per 6-loop
  int after_theta = 0;  // after the outside 3-chain, if any
  int after_phi = 0;    // after one step per 4-loop: the value
};

struct ProceduralValue {
  int value = 0;
  std::vector<ProceduralCase> applied;
  std::optional<ProceduralTrace> trace;
};

inline ProceduralTrace core_operator_trace(const Position& pos) {
  ProceduralTrace t;
  t.core = core(pos);
  t.core_value = controlled_value(t.core.core);
  int x = t.core_value;
  for (int i = 0; i < t.core.s_outside; ++i) x = sigma(x);
  t.after_sigma = x;
  for (int i = 0; i < t.core.theta_prime; ++i) x = theta_op(x);
  t.after_theta = x;
  for (int i = 0; i < t.core.f_outside; ++i) x = phi(x);
  t.after_phi = x;
  return t;
}

// Evaluates every applicable case (they may overlap and must agree); the
// parity fallback is used only when none applies.
inline ProceduralValue value_procedural_detail(const Position& pos) {
  if (pos.empty()) throw EmptyPosition();
  const MeasureSet m = measures(pos);
  ProceduralValue out;
  std::optional<int> agreed;
  auto record = [&](ProceduralCase which, int v) {
    if (agreed && *agreed != v) {
      throw InternalContradiction(
          "procedural cases disagree on " + pos.to_string() + ": " +
          std::to_string(*agreed) + " vs " + std::to_string(v) + " from " +
          std::string(to_string(which)));
    }
    agreed = v;
    out.applied.push_back(which);
  };

  if (m.c >= 2) record(ProceduralCase::LargeControlledValue, m.c);
  if (m.c == 0 && detail::four_loop_plus_except(pos,
                                                detail::three_three())) {
    record(ProceduralCase::ZeroWithFourLoop, 0);
  }
  if (detail::few_threes_shape(m)) {
    out.trace = core_operator_trace(pos);
    record(ProceduralCase::CoreOperators, out.trace->after_phi);
  }
  if (!agreed) {
    record(ProceduralCase::ParityFallback, m.size % 2 != 0 ? 1 : 2);
  }
  out.value = *agreed;
  return out;
}

inline int value_procedural(const Position& pos) {
  return value_procedural_detail(pos).value;
}

// Prior box advantage of the player who opens the endgame minus the endgame
// value: positive means that player wins the whole game.
inline int endgame_outcome(int advantage, const Position& pos) {
  return advantage - (pos.empty() ? 0 : value_explicit(pos));
}

}  // namespace dnb

#endif  // DNB_STRATEGY_HPP_
