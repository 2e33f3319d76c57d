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

// Exact endgame values by memoized game-tree recursion.
//
// After the opener opens C, the controller either keeps control (conceding
// 2 boxes of a chain or 4 of a loop and staying controller) or gives up
// control (taking all of C and becoming the opener of G-C). The value v(G)
// is the margin by which the controller wins under best play on both sides.

#ifndef DNB_ORACLE_HPP_
#define DNB_ORACLE_HPP_

#include <algorithm>
#include <cstdlib>
#include <map>
#include <unordered_map>
#include <vector>

#include "dnb/measures.hpp"
#include "dnb/position.hpp"

namespace dnb {

// Boxes conceded by the hard-hearted handout.
inline int handout(Component c) { return c.is_chain() ? 2 : 4; }

// Controller's margin for each response to an opened component, given the
// value of what remains.
struct ResponseMargins {
  int keep = 0;
  int give_up = 0;

  int best() const { return std::max(keep, give_up); }
  bool tie() const { return keep == give_up; }
};

inline ResponseMargins response_margins(Component opened,
                                        int remainder_value) {
  return {opened.length() - 2 * handout(opened) + remainder_value,
          opened.length() - remainder_value};
}

using Line = std::vector<Component>;

// Holds memo tables; one instance per evaluation context (not thread-safe).
class Oracle {
 public:
  int value(const Position& pos) {
    if (pos.empty()) return 0;
    if (auto it = values_.find(pos); it != values_.end()) return it->second;
    int best = -1;
    for (const auto& c : pos.distinct()) {
      int v = given_open_unchecked(pos, c);
      if (best < 0 || v < best) best = v;
    }
    values_.emplace(pos, best);
    return best;
  }

  // v(G;C): value once the opener has opened c.
  int value_given_open(const Position& pos, Component c) {
    if (!pos.contains(c)) {
      throw ComponentNotPresent("component " + c.to_string() +
                                " is not in position " + pos.to_string());
    }
    return given_open_unchecked(pos, c);
  }

  ResponseMargins margins(const Position& pos, Component c) {
    return response_margins(c, value(pos.without(c)));
  }

  std::vector<Component> optimal_openings(const Position& pos) {
    if (pos.empty()) throw EmptyPosition();
    int v = value(pos);
    std::vector<Component> out;
    for (const auto& c : pos.distinct()) {
      if (given_open_unchecked(pos, c) == v) out.push_back(c);
    }
    return out;
  }

  // Every order of opening components in which each opening attains the
  // value of the position it is made in. Sorted, without duplicates.
  std::vector<Line> enumerate_optimal_lines(const Position& pos) {
    if (pos.empty()) throw EmptyPosition();
    std::map<Position, std::vector<Line>> memo;
    return lines(pos, memo);
  }

  // Margin of a controller publicly committed to the control strategy:
  // keep control unless the opener opened the last component, or opened a
  // loop leaving only 3-chains. After giving up, the committed player opens
  // 3-chains until control returns. The opponent searches for its best reply.
  // Computed by search, independently of the closed form for c(G).
  int committed_control_value(const Position& pos) {
    return committed_controls(pos);
  }

  std::size_t cached_values() const { return values_.size(); }

 private:
  int given_open_unchecked(const Position& pos, Component c) {
    int rest = value(pos.without(c));
    int h = handout(c);
    return (c.length() - h) + std::abs(rest - h);
  }

  std::vector<Line> lines(const Position& pos,
                          std::map<Position, std::vector<Line>>& memo) {
    if (auto it = memo.find(pos); it != memo.end()) return it->second;
    std::vector<Line> out;
    for (const auto& c : optimal_openings(pos)) {
      Position rest = pos.without(c);
      if (rest.empty()) {
        out.push_back({c});
        continue;
      }
      for (auto& tail : lines(rest, memo)) {
        Line line{c};
        line.insert(line.end(), tail.begin(), tail.end());
        out.push_back(std::move(line));
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    memo.emplace(pos, out);
    return out;
  }

  static bool only_three_chains(const Position& pos) {
    return std::all_of(pos.components().begin(), pos.components().end(),
                       [](const Component& c) { return c.is_three_chain(); });
  }

  // Committed player is controller; opponent chooses what to open.
  int committed_controls(const Position& pos) {
    if (pos.empty()) return 0;
    if (auto it = committed_controls_.find(pos);
        it != committed_controls_.end()) {
      return it->second;
    }
    int best = 0;
    bool first = true;
    for (const auto& c : pos.distinct()) {
      Position rest = pos.without(c);
      int margin;
      if (rest.empty()) {
        margin = c.length();
      } else if (c.is_loop() && only_three_chains(rest)) {
        margin = c.length() + committed_opens(rest);
      } else {
        margin = c.length() - 2 * handout(c) + committed_controls(rest);
      }
      if (first || margin < best) best = margin;
      first = false;
    }
    committed_controls_.emplace(pos, best);
    return best;
  }

  // Committed player must open; only 3-chains remain. The opponent, now
  // controller, keeps or gives up as suits it.
  int committed_opens(const Position& pos) {
    if (pos.empty()) return 0;
    if (auto it = committed_opens_.find(pos); it != committed_opens_.end()) {
      return it->second;
    }
    Component three = Component::chain(3);
    Position rest = pos.without(three);
    int if_kept = 2 * handout(three) - three.length() + committed_opens(rest);
    int if_given = -three.length() + committed_controls(rest);
    int result = std::min(if_kept, if_given);
    committed_opens_.emplace(pos, result);
    return result;
  }

  std::unordered_map<Position, int> values_;
  std::unordered_map<Position, int> committed_controls_;
  std::unordered_map<Position, int> committed_opens_;
};

}  // namespace dnb

#endif  // DNB_ORACLE_HPP_
