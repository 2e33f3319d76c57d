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

// Abstract endgame positions: multisets of long chains and loops.
//
// Notation: a bare integer is a chain, an integer followed by `l` or `L` is a
// loop, `^k` repeats a term k times and terms are joined with `+`. The empty
// position is written "0". Examples: "3+4l+8l", "3^5+4l+8l", "8l^2+18".

#ifndef DNB_POSITION_HPP_
#define DNB_POSITION_HPP_

#include <algorithm>
#include <cctype>
#include <charconv>
#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dnb/error.hpp"

namespace dnb {

enum class Kind { Chain = 0, Loop = 1 };

// A single unopened chain (length >= 3) or loop (even length >= 4).
// Ordered chains first, then loops, each by ascending length.
class Component {
 public:
  static Component chain(int length) {
    if (length < 3) {
      throw ParseError("chain length must be at least 3, got " +
                       std::to_string(length));
    }
    return Component(Kind::Chain, length);
  }

  static Component loop(int length) {
    if (length < 4 || length % 2 != 0) {
      throw ParseError("loop length must be even and at least 4, got " +
                       std::to_string(length));
    }
    return Component(Kind::Loop, length);
  }

  static Component make(Kind kind, int length) {
    return kind == Kind::Chain ? chain(length) : loop(length);
  }

  Kind kind() const { return kind_; }
  int length() const { return length_; }
  bool is_chain() const { return kind_ == Kind::Chain; }
  bool is_loop() const { return kind_ == Kind::Loop; }
  bool is_three_chain() const { return is_chain() && length_ == 3; }

  std::string to_string() const {
    return std::to_string(length_) + (is_loop() ? "l" : "");
  }

  auto operator<=>(const Component&) const = default;

 private:
  Component(Kind kind, int length) : kind_(kind), length_(length) {}

  Kind kind_;
  int length_;
};

namespace detail {

// Largest position the parser accepts, in boxes. Guards `^k` blowups.
inline constexpr long kMaxParsedBoxes = 1'000'000;

inline std::string strip_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  }
  return out;
}

// Reads a decimal integer >= 1 at text[pos], advancing pos.
inline long read_positive_int(std::string_view text, std::size_t& pos,
                              std::string_view term) {
  long value = 0;
  const char* first = text.data() + pos;
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr == first) {
    throw ParseError("expected a number in term '" + std::string(term) + "'");
  }
  if (value < 1) {
    throw ParseError("numbers must be at least 1 in term '" +
                     std::string(term) + "'");
  }
  pos += static_cast<std::size_t>(ptr - first);
  return value;
}

struct ParsedTerm {
  Component component;
  long repeat;
};

inline ParsedTerm parse_term(std::string_view term) {
  if (term.empty()) throw ParseError("empty term");
  std::size_t pos = 0;
  long length = read_positive_int(term, pos, term);
  Kind kind = Kind::Chain;
  if (pos < term.size() && (term[pos] == 'l' || term[pos] == 'L')) {
    kind = Kind::Loop;
    ++pos;
  }
  long repeat = 1;
  if (pos < term.size() && term[pos] == '^') {
    ++pos;
    repeat = read_positive_int(term, pos, term);
  }
  if (pos != term.size()) {
    throw ParseError("unexpected character in term '" + std::string(term) +
                     "'");
  }
  if (length > kMaxParsedBoxes) {
    throw ParseError("component too long in term '" + std::string(term) + "'");
  }
  return {Component::make(kind, static_cast<int>(length)), repeat};
}

}  // namespace detail

// Parses a single component such as "3" or "10l".
inline Component parse_component(std::string_view text) {
  std::string term = detail::strip_spaces(text);
  auto parsed = detail::parse_term(term);
  if (parsed.repeat != 1) {
    throw ParseError("expected a single component, got '" + term + "'");
  }
  return parsed.component;
}

// Multiset of components kept in canonical (sorted) order, so equal
// multisets compare and hash equal.
class Position {
 public:
  Position() = default;

  explicit Position(std::vector<Component> components)
      : components_(std::move(components)) {
    std::sort(components_.begin(), components_.end());
    for (const auto& c : components_) size_ += c.length();
  }

  Position(std::initializer_list<Component> components)
      : Position(std::vector<Component>(components)) {}

  static Position parse(std::string_view text) {
    std::string s = detail::strip_spaces(text);
    if (s.empty()) throw ParseError("empty position text");
    if (s == "0") return Position();
    std::vector<Component> out;
    long boxes = 0;
    std::size_t start = 0;
    while (true) {
      std::size_t plus = s.find('+', start);
      std::string_view term =
          std::string_view(s).substr(start, plus == std::string::npos
                                                ? std::string::npos
                                                : plus - start);
      auto parsed = detail::parse_term(term);
      boxes += parsed.repeat * parsed.component.length();
      if (parsed.repeat > detail::kMaxParsedBoxes ||
          boxes > detail::kMaxParsedBoxes) {
        throw ParseError("position too large");
      }
      out.insert(out.end(), static_cast<std::size_t>(parsed.repeat),
                 parsed.component);
      if (plus == std::string::npos) break;
      start = plus + 1;
    }
    return Position(std::move(out));
  }

  std::span<const Component> components() const { return components_; }
  bool empty() const { return components_.empty(); }
  std::size_t component_count() const { return components_.size(); }

  // Total number of boxes.
  int size() const { return size_; }

  int count(Component c) const {
    auto [lo, hi] = std::equal_range(components_.begin(), components_.end(), c);
    return static_cast<int>(hi - lo);
  }

  bool contains(Component c) const {
    return std::binary_search(components_.begin(), components_.end(), c);
  }

  // One representative per distinct component, in canonical order.
  std::vector<Component> distinct() const {
    std::vector<Component> out;
    for (const auto& c : components_) {
      if (out.empty() || out.back() != c) out.push_back(c);
    }
    return out;
  }

  // Removes one occurrence of c.
  Position without(Component c) const {
    auto it = std::lower_bound(components_.begin(), components_.end(), c);
    if (it == components_.end() || *it != c) {
      throw ComponentNotPresent("component " + c.to_string() +
                                " is not in position " + to_string());
    }
    Position out;
    out.components_.reserve(components_.size() - 1);
    out.components_.insert(out.components_.end(), components_.begin(), it);
    out.components_.insert(out.components_.end(), it + 1, components_.end());
    out.size_ = size_ - c.length();
    return out;
  }

  Position with(Component c, int copies = 1) const {
    Position out = *this;
    auto it = std::upper_bound(out.components_.begin(), out.components_.end(),
                               c);
    out.components_.insert(it, static_cast<std::size_t>(copies), c);
    out.size_ += copies * c.length();
    return out;
  }

  Position operator+(const Position& other) const {
    std::vector<Component> all = components_;
    all.insert(all.end(), other.components_.begin(), other.components_.end());
    return Position(std::move(all));
  }

  // Canonical notation: chains then loops, ascending, repeats as `^k`.
  std::string to_string() const {
    if (components_.empty()) return "0";
    std::string out;
    std::size_t i = 0;
    while (i < components_.size()) {
      std::size_t j = i;
      while (j < components_.size() && components_[j] == components_[i]) ++j;
      if (!out.empty()) out += '+';
      out += components_[i].to_string();
      if (j - i > 1) out += '^' + std::to_string(j - i);
      i = j;
    }
    return out;
  }

  bool operator==(const Position& other) const {
    return components_ == other.components_;
  }

  // Canonical encoding order: size first, then component sequence.
  std::strong_ordering operator<=>(const Position& other) const {
    if (auto cmp = size_ <=> other.size_; cmp != 0) return cmp;
    return std::lexicographical_compare_three_way(
        components_.begin(), components_.end(), other.components_.begin(),
        other.components_.end());
  }

 private:
  std::vector<Component> components_;
  int size_ = 0;
};

inline Position parse(std::string_view text) { return Position::parse(text); }

inline std::string format(const Position& pos) { return pos.to_string(); }

inline Position remove(const Position& pos, Component c) {
  return pos.without(c);
}

// Every nonempty position with at most max_size boxes, each exactly once,
// ordered by size and then by canonical component sequence.
inline std::vector<Position> enumerate_positions(int max_size) {
  std::vector<Component> kinds;
  for (int n = 3; n <= max_size; ++n) kinds.push_back(Component::chain(n));
  for (int n = 4; n <= max_size; n += 2) kinds.push_back(Component::loop(n));

  std::vector<Position> out;
  std::vector<Component> current;
  std::function<void(std::size_t, int)> extend = [&](std::size_t first,
                                                     int budget) {
    if (!current.empty()) out.emplace_back(current);
    for (std::size_t k = first; k < kinds.size(); ++k) {
      if (kinds[k].length() > budget) continue;
      current.push_back(kinds[k]);
      extend(k, budget - kinds[k].length());
      current.pop_back();
    }
  };
  extend(0, max_size);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dnb

template <>
struct std::hash<dnb::Component> {
  std::size_t operator()(const dnb::Component& c) const noexcept {
    return static_cast<std::size_t>(c.length()) * 2 +
           (c.is_loop() ? 1 : 0);
  }
};

template <>
struct std::hash<dnb::Position> {
  std::size_t operator()(const dnb::Position& p) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    std::hash<dnb::Component> hc;
    for (const auto& c : p.components()) {
      h ^= hc(c) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

#endif  // DNB_POSITION_HPP_
