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

#ifndef DNB_MEASURES_HPP_
#define DNB_MEASURES_HPP_

#include <cassert>

#include "dnb/position.hpp"

namespace dnb {

// Scalar summary of a position. `c` is the controlled value: the margin a
// controller who always keeps control (except where that is obviously wrong)
// wins by against a perfect opener.
struct MeasureSet {
  int size = 0;
  int theta = 0;  // 3-chains
  int f = 0;      // 4-loops
  int s = 0;      // 6-loops
  int num_chains = 0;
  int num_loops = 0;
  int tb = 0;
  int c = 0;

  bool operator==(const MeasureSet&) const = default;
};

// 0 for the empty position, 8 if only loops remain, 6 if only loops and
// 3-chains remain (at least one of each), 4 otherwise.
inline int terminal_bonus(const Position& pos) {
  if (pos.empty()) return 0;
  bool has_loop = false;
  bool has_three = false;
  bool has_other_chain = false;
  for (const auto& c : pos.components()) {
    if (c.is_loop()) {
      has_loop = true;
    } else if (c.length() == 3) {
      has_three = true;
    } else {
      has_other_chain = true;
    }
  }
  if (has_loop && !has_three && !has_other_chain) return 8;
  if (has_loop && has_three && !has_other_chain) return 6;
  return 4;
}

// Sum of per-component excesses over the handout cost, plus terminal bonus.
inline int controlled_value_by_excess(const Position& pos) {
  int total = terminal_bonus(pos);
  for (const auto& c : pos.components()) {
    total += c.is_chain() ? c.length() - 4 : c.length() - 8;
  }
  return total;
}

inline MeasureSet measures(const Position& pos) {
  MeasureSet m;
  m.size = pos.size();
  for (const auto& c : pos.components()) {
    if (c.is_chain()) {
      ++m.num_chains;
      if (c.length() == 3) ++m.theta;
    } else {
      ++m.num_loops;
      if (c.length() == 4) ++m.f;
      if (c.length() == 6) ++m.s;
    }
  }
  m.tb = terminal_bonus(pos);
  m.c = m.size - 4 * m.num_chains - 8 * m.num_loops + m.tb;
  assert(m.c == controlled_value_by_excess(pos));
  return m;
}

inline int controlled_value(const Position& pos) { return measures(pos).c; }

}  // namespace dnb

#endif  // DNB_MEASURES_HPP_
