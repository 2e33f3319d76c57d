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

// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "dnb/engine.hpp"
#include "dnb/measures.hpp"
#include "dnb/oracle.hpp"
#include "dnb/position.hpp"
#include "dnb/strategy.hpp"
#include "dnb/verify.hpp"

namespace {

using namespace dnb;
using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since)
      .count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome intro_position() {
  auto t0 = Clock::now();
  Oracle oracle;
  const Position g = parse("3+4l+8l");
  int v = oracle.value(g);
  auto lines = oracle.enumerate_optimal_lines(g);
  auto move = opener_move(g);
  double ms = elapsed_ms(t0);
  const Line expected{Component::loop(4), Component::loop(8),
                      Component::chain(3)};
  bool ok = v == 1 && lines.size() == 1 && lines[0] == expected &&
            move.chosen == Component::loop(4) && ms < 1.0;
  return {ok, "v=" + std::to_string(v) + ", lines=" +
                  std::to_string(lines.size()) + ", " + std::to_string(ms) +
                  " ms (limit 1 ms)"};
}

Outcome five_threes_lines() {
  auto t0 = Clock::now();
  Oracle oracle;
  const Position g = parse("3^5+4l+8l");
  int c = controlled_value(g);
  auto lines = oracle.enumerate_optimal_lines(g);
  double ms = elapsed_ms(t0);
  const Component t = Component::chain(3);
  const Component f = Component::loop(4);
  const Component e = Component::loop(8);
  const std::vector<Line> expected = {{t, t, f, t, t, e, t},
                                      {t, f, t, t, t, e, t}};
  bool ok = c == -3 && lines == expected && ms < 10.0;
  return {ok, "c=" + std::to_string(c) + ", lines=" +
                  std::to_string(lines.size()) + ", " + std::to_string(ms) +
                  " ms (limit 10 ms)"};
}

Outcome threes_sequence() {
  Oracle oracle;
  const int expected[] = {0, 3, 2, 1, 2, 1, 2, 1};
  std::string got;
  bool ok = true;
  for (int n = 0; n <= 7; ++n) {
    int v = oracle.value(Position(std::vector<Component>(n, Component::chain(3))));
    ok = ok && v == expected[n];
    got += std::to_string(v) + (n < 7 ? "," : "");
  }
  return {ok, "v(3^n)=" + got};
}

Outcome threes_and_four_loops_table() {
  const int table[4][7] = {{0, 4, 0, 4, 0, 4, 0},
                           {3, 1, 3, 1, 3, 1, 3},
                           {2, 2, 2, 2, 2, 2, 2},
                           {1, 1, 1, 1, 1, 1, 1}};
  Oracle oracle;
  int cells = 0;
  int wrong = 0;
  for (int theta = 0; theta <= 3; ++theta) {
    for (int f = 0; f <= 6; ++f) {
      Position p = Position().with(Component::chain(3), theta);
      if (f > 0) p = p.with(Component::loop(4), f);
      ++cells;
      int v = oracle.value(p);
      if (v != table[theta][f]) ++wrong;
      if (!p.empty() && value_explicit(p) != table[theta][f]) ++wrong;
    }
  }
  return {cells == 28 && wrong == 0, std::to_string(cells) + " cells, " +
                                         std::to_string(wrong) + " mismatches"};
}

Outcome procedural_trace() {
  auto r = value_procedural_detail(parse("8l^2+18+6l^9+3+4l^101"));
  if (!r.trace) return {false, "core operators did not apply"};
  const auto& t = *r.trace;
  bool ok = t.core.core == parse("8l+8l+18") && t.core_value == 18 &&
            t.after_sigma == 4 && t.after_theta == 3 && t.after_phi == 1 &&
            r.value == 1;
  return {ok, "core " + t.core.core.to_string() + ": " +
                  std::to_string(t.core_value) + " -> " +
                  std::to_string(t.after_sigma) + " -> " +
                  std::to_string(t.after_theta) + " -> " +
                  std::to_string(t.after_phi)};
}

Outcome recorded_playouts() {
  const Position g = parse("12+10l");
  auto loop_first = new_game(g, 3)
                        .apply(Action::open(Component::loop(10)))
                        .apply(Action::keep())
                        .apply(Action::open(Component::chain(12)))
                        .apply(Action::give_up());
  auto chain_first = new_game(g, 3)
                         .apply(Action::open(Component::chain(12)))
                         .apply(Action::keep())
                         .apply(Action::open(Component::loop(10)))
                         .apply(Action::give_up());
  auto score = [](const GameState& s) {
    return std::to_string(s.totals()[1]) + "-" + std::to_string(s.totals()[0]);
  };
  // The optimal policies must pick the loop-first line.
  auto best = playout(g, PolicyKind::Optimal, PolicyKind::Optimal);
  bool ok = score(loop_first) == "18-7" && score(chain_first) == "20-5" &&
            best.transcript == loop_first.transcript();
  return {ok, "open loop " + score(loop_first) + ", open chain " +
                  score(chain_first)};
}

Outcome report_outcome(const VerifyReport& r, double limit_ms) {
  bool ok = r.passed() && (limit_ms <= 0 || r.elapsed.count() <= limit_ms);
  std::string detail = std::to_string(r.positions_checked) + " positions, " +
                       std::to_string(r.failures.size()) + " failures, " +
                       std::to_string(r.elapsed.count()) + " ms";
  if (!r.failures.empty()) {
    const auto& f = r.failures.front();
    detail += "; first: " + f.check + " at " + f.position + " expected " +
              f.expected + " got " + f.actual;
  }
  return {ok, detail};
}

}  // namespace

int main() {
  Oracle shared;
  VerifyReport equivalence;

  struct Criterion {
    std::string name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria = {
      {"v(3+4l+8l)=1, opens 4l then 8l, < 1 ms", intro_position},
      {"c(3^5+4l+8l)=-3 and exactly two optimal lines, < 10 ms",
       five_threes_lines},
      {"v(3^n) = 0,3,2,1,2,1,2,1 for n=0..7", threes_sequence},
      {"3-chains and 4-loops table, 28 cells", threes_and_four_loops_table},
      {"procedural trace 18 -> 4 -> 3 -> 1", procedural_trace},
      {"12+10l with +3 prior: 18-7 and 20-5", recorded_playouts},
      {"exhaustive equivalence, size <= 36, <= 60 s",
       [&] {
         equivalence = check_equivalence(36, shared);
         return report_outcome(equivalence, 60'000);
       }},
      {"committed control value = c, size <= 28",
       [&] { return report_outcome(check_controlled_value(28, shared), 0); }},
      {"invariant suite, size <= 36",
       [&] { return report_outcome(check_invariants(36, shared), 0); }},
      {"every closed-form case hit in the size <= 36 run",
       [&] {
         auto missing = equivalence.uncovered();
         std::string detail =
             std::to_string(equivalence.coverage.size()) + " counters";
         for (const auto& m : missing) detail += ", zero: " + m;
         return Outcome{missing.empty() && !equivalence.coverage.empty(),
                        detail};
       }},
  };

  int failed = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    if (!out.pass) ++failed;
    std::printf("[%s] AC%02d %s -- %s\n", out.pass ? "PASS" : "FAIL", index,
                c.name.c_str(), out.detail.c_str());
  }
  for (const auto& [name, hits] : equivalence.coverage) {
    std::printf("       coverage %-45s %ld\n", name.c_str(), hits);
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
