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

// Exhaustive and targeted verification of the closed forms against the
// game-tree oracle. Failures are collected into a report, never thrown.

#ifndef DNB_VERIFY_HPP_
#define DNB_VERIFY_HPP_

#include <chrono>
#include <cstdint>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dnb/engine.hpp"
#include "dnb/measures.hpp"
#include "dnb/oracle.hpp"
#include "dnb/position.hpp"
#include "dnb/strategy.hpp"

namespace dnb {

struct VerifyFailure {
  std::string position;
  std::string check;
  std::string expected;
  std::string actual;
};

struct VerifyReport {
  std::string family;
  long positions_checked = 0;
  std::vector<VerifyFailure> failures;
  std::chrono::milliseconds elapsed{0};
  // Hits per closed-form case; a zero entry means a dead branch.
  std::map<std::string, long> coverage;

  bool passed() const { return failures.empty(); }

  std::vector<std::string> uncovered() const {
    std::vector<std::string> out;
    for (const auto& [name, hits] : coverage) {
      if (hits == 0) out.push_back(name);
    }
    return out;
  }

  void fail(const std::string& pos, const std::string& check,
            const std::string& expected, const std::string& actual) {
    failures.push_back({pos, check, expected, actual});
  }

  template <class T>
  void expect_eq(const std::string& pos, const std::string& check,
                 const T& expected, const T& actual) {
    if (expected == actual) return;
    std::ostringstream e, a;
    e << expected;
    a << actual;
    fail(pos, check, e.str(), a.str());
  }

  void merge(const VerifyReport& other) {
    positions_checked += other.positions_checked;
    failures.insert(failures.end(), other.failures.begin(),
                    other.failures.end());
    elapsed += other.elapsed;
    for (const auto& [name, hits] : other.coverage) coverage[name] += hits;
  }
};

inline nlohmann::json to_json(const VerifyReport& r) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"position", f.position},
                        {"check", f.check},
                        {"expected", f.expected},
                        {"actual", f.actual}});
  }
  return {{"family", r.family},
          {"positions_checked", r.positions_checked},
          {"failures", failures},
          {"elapsed_ms", r.elapsed.count()},
          {"coverage", r.coverage},
          {"passed", r.passed()}};
}

inline std::string summary(const VerifyReport& r) {
  std::ostringstream out;
  out << r.family << ": " << r.positions_checked << " checked, "
      << r.failures.size() << " failures, " << r.elapsed.count() << " ms"
      << (r.passed() ? " [PASS]" : " [FAIL]") << "\n";
  for (std::size_t i = 0; i < r.failures.size() && i < 20; ++i) {
    const auto& f = r.failures[i];
    out << "  " << f.check << " at " << f.position << ": expected "
        << f.expected << ", got " << f.actual << "\n";
  }
  if (r.failures.size() > 20) {
    out << "  ... " << r.failures.size() - 20 << " more\n";
  }
  return out.str();
}

namespace detail {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::chrono::milliseconds elapsed() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start_);
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline std::string line_to_string(const Line& line) {
  std::string out;
  for (const auto& c : line) {
    if (!out.empty()) out += ',';
    out += c.to_string();
  }
  return out;
}

}  // namespace detail

// Closed-form values, the opener and controller rules and the committed-control
// search against the oracle, for every position of size <= max_size.
inline VerifyReport check_equivalence(int max_size, Oracle& oracle) {
  detail::Stopwatch clock;
  VerifyReport r;
  r.family = "equivalence(max_size=" + std::to_string(max_size) + ")";
  for (int i = 0; i < kExplicitCaseCount; ++i) {
    r.coverage["explicit." +
               std::string(to_string(static_cast<ExplicitCase>(i)))] = 0;
  }
  for (int i = 0; i < kProceduralCaseCount; ++i) {
    r.coverage["procedural." +
               std::string(to_string(static_cast<ProceduralCase>(i)))] = 0;
  }
  for (auto rule : {OpenerRule::ThreeChainPlusLoops,
                    OpenerRule::FourLoopSmallControl,
                    OpenerRule::FourLoopThreeChain, OpenerRule::StandardMove}) {
    r.coverage["opener." + std::string(to_string(rule))] = 0;
  }

  for (const auto& pos : enumerate_positions(max_size)) {
    ++r.positions_checked;
    const std::string name = pos.to_string();
    const int v = oracle.value(pos);

    auto ex = value_explicit_detail(pos);
    ++r.coverage["explicit." + std::string(to_string(ex.which))];
    r.expect_eq(name, "value_explicit", v, ex.value);

    try {
      auto pr = value_procedural_detail(pos);
      for (auto which : pr.applied) {
        ++r.coverage["procedural." + std::string(to_string(which))];
      }
      r.expect_eq(name, "value_procedural", v, pr.value);
    } catch (const InternalContradiction& e) {
      r.fail(name, "procedural_cases_agree", "agreement", e.what());
    }

    r.expect_eq(name, "value_exceeds_two", v > 2, value_exceeds_two(pos));

    auto move = opener_move(pos);
    ++r.coverage["opener." + std::string(to_string(move.rule))];
    r.expect_eq(name, "opener_move(" + move.chosen.to_string() + ")", v,
                oracle.value_given_open(pos, move.chosen));

    for (const auto& c : pos.distinct()) {
      Position rest = pos.without(c);
      auto margins = response_margins(c, oracle.value(rest));
      auto decision = controller_decision(rest, c);
      int got = decision == Response::Keep ? margins.keep : margins.give_up;
      r.expect_eq(name, "controller_decision(" + c.to_string() + ")",
                  margins.best(), got);
    }

    r.expect_eq(name, "committed_control_value", controlled_value(pos),
                oracle.committed_control_value(pos));
  }
  r.elapsed = clock.elapsed();
  return r;
}

inline VerifyReport check_equivalence(int max_size) {
  Oracle oracle;
  return check_equivalence(max_size, oracle);
}

// The committed controller wins by exactly c(G).
inline VerifyReport check_controlled_value(int max_size, Oracle& oracle) {
  detail::Stopwatch clock;
  VerifyReport r;
  r.family = "controlled_value(max_size=" + std::to_string(max_size) + ")";
  for (const auto& pos : enumerate_positions(max_size)) {
    ++r.positions_checked;
    r.expect_eq(pos.to_string(), "committed_control_value",
                controlled_value(pos), oracle.committed_control_value(pos));
  }
  r.elapsed = clock.elapsed();
  return r;
}

// Value and measure relations that hold for every position.
inline VerifyReport check_invariants(int max_size, Oracle& oracle) {
  detail::Stopwatch clock;
  VerifyReport r;
  r.family = "invariants(max_size=" + std::to_string(max_size) + ")";
  auto mod = [](int x, int m) { return ((x % m) + m) % m; };
  for (const auto& pos : enumerate_positions(max_size)) {
    ++r.positions_checked;
    const std::string name = pos.to_string();
    const MeasureSet m = measures(pos);
    const int v = oracle.value(pos);

    r.expect_eq(name, "c_sum_form", m.c, controlled_value_by_excess(pos));
    r.expect_eq(name, "v_nonnegative", true, v >= 0);
    r.expect_eq(name, "c_at_most_v", true, m.c <= v);
    r.expect_eq(name, "v_parity", mod(m.size, 2), mod(v, 2));
    r.expect_eq(name, "c_parity", mod(m.size, 2), mod(m.c, 2));
    if (m.theta == 0) {
      r.expect_eq(name, "c_mod4_without_threes", mod(m.size, 4), mod(m.c, 4));
      if (m.size % 2 == 0) {
        r.expect_eq(name, "v_mod4_even_without_threes", mod(m.size, 4),
                    mod(v, 4));
      }
    }
    if (m.c >= 2) r.expect_eq(name, "large_c_is_v", m.c, v);

    for (const auto& c : pos.distinct()) {
      r.expect_eq(name, "v_given_open_parity(" + c.to_string() + ")",
                  mod(m.size, 2), mod(oracle.value_given_open(pos, c), 2));
      int tb = terminal_bonus(pos.without(c));
      r.expect_eq(name, "tb_after_removal(" + c.to_string() + ")", true,
                  tb == 0 || tb == 4 || tb == 6 || tb == 8);
    }

    if (m.theta <= 1) {
      auto g0 = core(pos);
      r.expect_eq(name, "core_idempotent", g0.core.to_string(),
                  core(g0.core).core.to_string());
      for (const auto& extra : {Component::loop(4), Component::loop(6)}) {
        r.expect_eq(name, "core_with_extra_" + extra.to_string(),
                    g0.core.to_string(), core(g0.core.with(extra)).core.to_string());
      }
      // A 3-chain joins the core when it would be the only chain.
      const MeasureSet mc = measures(g0.core);
      if (mc.theta == 0 && mc.num_chains > 0) {
        r.expect_eq(name, "core_with_extra_3", g0.core.to_string(),
                    core(g0.core.with(Component::chain(3))).core.to_string());
      }
      if (!g0.core.empty()) {
        r.expect_eq(name, "core_c_at_least_3", true,
                    controlled_value(g0.core) >= 3);
      }
    }
  }
  r.elapsed = clock.elapsed();
  return r;
}

// Random positions up to max_size boxes (at most 200), beyond oracle reach:
// the explicit and procedural values must agree.
inline VerifyReport check_sampled(std::uint64_t seed, int count,
                                  int max_size) {
  detail::Stopwatch clock;
  VerifyReport r;
  r.family = "sampled(seed=" + std::to_string(seed) +
             ", count=" + std::to_string(count) +
             ", max_size=" + std::to_string(max_size) + ")";
  if (max_size > 200) max_size = 200;
  std::mt19937_64 rng(seed);
  // Small components dominate, so 3-chains, 4-loops and 6-loops are common.
  std::discrete_distribution<int> pick({6, 3, 3, 1, 4, 3, 1, 1});
  std::uniform_int_distribution<int> long_len(5, 30);
  for (int i = 0; i < count; ++i) {
    std::vector<Component> parts;
    int budget = std::uniform_int_distribution<int>(3, max_size)(rng);
    for (int tries = 0; tries < 200 && budget >= 3; ++tries) {
      Component c = Component::chain(3);
      switch (pick(rng)) {
        case 0: c = Component::chain(3); break;
        case 1: c = Component::chain(4); break;
        case 2: c = Component::chain(long_len(rng)); break;
        case 3: c = Component::loop(2 * (long_len(rng) / 2) + 4); break;
        case 4: c = Component::loop(4); break;
        case 5: c = Component::loop(6); break;
        case 6: c = Component::loop(8); break;
        case 7: c = Component::chain(5); break;
      }
      if (c.length() > budget) continue;
      parts.push_back(c);
      budget -= c.length();
    }
    if (parts.empty()) parts.push_back(Component::chain(3));
    Position pos(std::move(parts));
    ++r.positions_checked;
    try {
      r.expect_eq(pos.to_string(), "explicit_vs_procedural",
                  value_explicit(pos), value_procedural(pos));
    } catch (const InternalContradiction& e) {
      r.fail(pos.to_string(), "procedural_cases_agree", "agreement", e.what());
    }
  }
  r.elapsed = clock.elapsed();
  return r;
}

// Worked examples with published values.
inline VerifyReport check_worked_examples() {
  detail::Stopwatch clock;
  VerifyReport r;
  r.family = "worked_examples";
  Oracle oracle;
  auto check = [&](const std::string& pos, const std::string& what,
                   const auto& expected, const auto& actual) {
    ++r.positions_checked;
    r.expect_eq(pos, what, expected, actual);
  };

  const Position intro = parse("3+4l+8l");
  check("3+4l+8l", "value", 1, oracle.value(intro));
  check("3+4l+8l", "opener_move", std::string("4l"),
        opener_move(intro).chosen.to_string());
  check("3+4l+8l", "optimal_lines", std::string("4l,8l,3"),
        oracle.enumerate_optimal_lines(intro).size() == 1
            ? detail::line_to_string(oracle.enumerate_optimal_lines(intro)[0])
            : std::string("several"));

  const Position ex1 = parse("3^5+4l+8l");
  check("3^5+4l+8l", "controlled_value", -3, controlled_value(ex1));
  check("3^5+4l+8l", "terminal_bonus", 6, terminal_bonus(ex1));
  check("3^5+4l+8l", "value", 1, oracle.value(ex1));
  check("3^5+4l+8l", "value_explicit", 1, value_explicit(ex1));
  check("3^5+4l+8l", "opener_move", std::string("3"),
        opener_move(ex1).chosen.to_string());
  {
    auto lines = oracle.enumerate_optimal_lines(ex1);
    std::string got;
    for (const auto& l : lines) got += "(" + detail::line_to_string(l) + ")";
    check("3^5+4l+8l", "optimal_lines",
          std::string("(3,3,4l,3,3,8l,3)(3,4l,3,3,3,8l,3)"), got);
  }

  for (int n = 0; n <= 7; ++n) {
    static constexpr int kThrees[8] = {0, 3, 2, 1, 2, 1, 2, 1};
    Position threes(std::vector<Component>(n, Component::chain(3)));
    check(threes.to_string(), "value", kThrees[n], oracle.value(threes));
  }
  check("3+3", "value_given_open(3)", 2,
        oracle.value_given_open(parse("3+3"), Component::chain(3)));
  check("3", "controller_decision(3)", std::string("keep"),
        std::string(to_string(controller_decision(parse("3"),
                                                  Component::chain(3)))));
  check("3^3", "controller_decision(3)", std::string("give_up"),
        std::string(to_string(controller_decision(parse("3^3"),
                                                  Component::chain(3)))));

  static constexpr int kTable[4][7] = {{0, 4, 0, 4, 0, 4, 0},
                                       {3, 1, 3, 1, 3, 1, 3},
                                       {2, 2, 2, 2, 2, 2, 2},
                                       {1, 1, 1, 1, 1, 1, 1}};
  for (int theta = 0; theta <= 3; ++theta) {
    for (int f = 0; f <= 6; ++f) {
      if (theta == 0 && f == 0) continue;
      Position pos = Position().with(Component::chain(3), theta);
      if (f > 0) pos = pos.with(Component::loop(4), f);
      check(pos.to_string(), "threes_and_four_loops", kTable[theta][f],
            value_explicit(pos));
      check(pos.to_string(), "threes_and_four_loops_oracle", kTable[theta][f],
            oracle.value(pos));
    }
  }

  {
    const Position ex2 = parse("8l^2+18+6l^9+3+4l^101");
    auto pv = value_procedural_detail(ex2);
    std::string trace = "?";
    if (pv.trace) {
      trace = pv.trace->core.core.to_string() + ":" +
              std::to_string(pv.trace->core_value) + "," +
              std::to_string(pv.trace->after_sigma) + "," +
              std::to_string(pv.trace->after_theta) + "," +
              std::to_string(pv.trace->after_phi);
    }
    check(ex2.to_string(), "procedural_trace", std::string("18+8l^2:18,4,3,1"),
          trace);
    check(ex2.to_string(), "value_procedural", 1, pv.value);
    check(ex2.to_string(), "value_explicit", 1, value_explicit(ex2));
  }

  {
    const Position fig = parse("12+10l");
    GameState loop_first = new_game(fig, 3)
                               .apply(Action::open(Component::loop(10)))
                               .apply(Action::keep())
                               .apply(Action::open(Component::chain(12)))
                               .apply(Action::give_up());
    check("12+10l", "open_loop_final_score", std::string("18-7"),
          std::to_string(loop_first.totals()[1]) + "-" +
              std::to_string(loop_first.totals()[0]));
    GameState chain_first = new_game(fig, 3)
                                .apply(Action::open(Component::chain(12)))
                                .apply(Action::keep())
                                .apply(Action::open(Component::loop(10)))
                                .apply(Action::give_up());
    check("12+10l", "open_chain_final_score", std::string("20-5"),
          std::to_string(chain_first.totals()[1]) + "-" +
              std::to_string(chain_first.totals()[0]));
    check("12+10l", "controller_decision(10l)", std::string("keep"),
          std::string(to_string(controller_decision(parse("12"),
                                                    Component::loop(10)))));
  }

  check("3+3+3+4l", "opener_rule", std::string("standard_move"),
        std::string(to_string(opener_move(parse("3+3+3+4l")).rule)));
  check("(A=2, v=3)", "endgame_outcome", -1,
        endgame_outcome(2, parse("3+6l^2")));
  check("4l+8l", "terminal_bonus", 8, terminal_bonus(parse("4l+8l")));
  check("3+4", "terminal_bonus", 4, terminal_bonus(parse("3+4")));
  check("0", "terminal_bonus", 0, terminal_bonus(Position()));
  check("0", "value", 0, oracle.value(Position()));

  r.elapsed = clock.elapsed();
  return r;
}

}  // namespace dnb

#endif  // DNB_VERIFY_HPP_
