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

// Request handling for the HTTP facade, kept independent of the transport so
// it can be exercised directly. http_server.hpp binds it to sockets.

#ifndef DNB_SERVICE_HPP_
#define DNB_SERVICE_HPP_

#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dnb/engine.hpp"
#include "dnb/measures.hpp"
#include "dnb/oracle.hpp"
#include "dnb/position.hpp"
#include "dnb/strategy.hpp"

namespace dnb {

using json = nlohmann::json;

struct WhatIf {
  Component component;
  int value_given_open;
  Response controller_reply;
};

struct Evaluation {
  Position position;
  MeasureSet measures;
  int value = 0;
  std::vector<WhatIf> per_component;
  OpenerRationale best;
  bool searched = false;  // values from the oracle rather than closed form
};

namespace detail {

// Number of sub-multisets, capped; bounds the oracle's work.
inline long sub_positions(const Position& pos, long cap) {
  long total = 1;
  for (const auto& c : pos.distinct()) {
    total *= pos.count(c) + 1;
    if (total > cap) return cap + 1;
  }
  return total;
}

inline constexpr long kSearchLimit = 200'000;

}  // namespace detail

// Measures, value, and what-if values for every distinct opening. Small
// positions go through the oracle; larger ones use the closed forms.
inline Evaluation evaluate(const Position& pos) {
  if (pos.empty()) throw EmptyPosition();
  Evaluation e{pos, measures(pos), 0, {}, opener_move(pos), false};
  e.searched = detail::sub_positions(pos, detail::kSearchLimit) <=
               detail::kSearchLimit;
  Oracle oracle;
  auto value_of = [&](const Position& p) {
    if (p.empty()) return 0;
    return e.searched ? oracle.value(p) : value_explicit(p);
  };
  e.value = value_of(pos);
  for (const auto& c : pos.distinct()) {
    Position rest = pos.without(c);
    int h = handout(c);
    int given = (c.length() - h) + std::abs(value_of(rest) - h);
    e.per_component.push_back({c, given, controller_decision(rest, c)});
  }
  return e;
}

inline json measures_json(const MeasureSet& m) {
  return {{"size", m.size},     {"theta", m.theta},
          {"f", m.f},           {"s", m.s},
          {"num_chains", m.num_chains}, {"num_loops", m.num_loops},
          {"tb", m.tb},         {"c", m.c}};
}

inline json rationale_json(const OpenerRationale& r) {
  json out = {{"component", r.chosen.to_string()},
              {"rule", to_string(r.rule)},
              {"description", describe(r.rule)}};
  if (r.standard_reason) out["reason"] = to_string(*r.standard_reason);
  return out;
}

inline json evaluation_json(const Evaluation& e) {
  json rows = json::array();
  for (const auto& w : e.per_component) {
    rows.push_back({{"component", w.component.to_string()},
                    {"value_given_open", w.value_given_open},
                    {"controller_keeps", w.controller_reply == Response::Keep}});
  }
  return {{"position", e.position.to_string()},
          {"measures", measures_json(e.measures)},
          {"value", e.value},
          {"per_component", rows},
          {"best_move", rationale_json(e.best)}};
}

inline json action_json(const Action& a) {
  switch (a.type()) {
    case Action::Type::Open:
      return {{"type", "open"}, {"component", a.component()->to_string()}};
    case Action::Type::Keep:
      return {{"type", "keep"}};
    case Action::Type::GiveUp:
      return {{"type", "give_up"}};
  }
  return nullptr;
}

// Accepts {"type": "open", "component": "10l"}, {"type": "keep"},
// {"type": "give_up"}, or the plain text form "open 10l".
inline Action action_from_json(const json& j) {
  if (j.is_string()) return Action::parse(j.get<std::string>());
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
    throw ParseError("action must be an object with a string 'type'");
  }
  const std::string type = j["type"].get<std::string>();
  if (type == "open") {
    if (!j.contains("component") || !j["component"].is_string()) {
      throw ParseError("open action needs a 'component' string");
    }
    return Action::open(parse_component(j["component"].get<std::string>()));
  }
  if (type == "keep") return Action::keep();
  if (type == "give_up") return Action::give_up();
  throw ParseError("unknown action type '" + type + "'");
}

inline json state_json(const GameState& s) {
  json transcript = json::array();
  for (const auto& a : s.transcript()) transcript.push_back(action_json(a));
  json roles = json::array();
  for (int p = 0; p < 2; ++p) {
    roles.push_back(p == s.opener() ? "opener" : "controller");
  }
  return {{"initial", s.initial().to_string()},
          {"remaining", s.remaining().to_string()},
          {"pending", s.pending() ? json(s.pending()->to_string()) : json()},
          {"to_act", to_string(s.to_act())},
          {"acting_player", s.terminal() ? json() : json(s.acting_player())},
          {"boxes", s.boxes()},
          {"roles", roles},
          {"prior_advantage", s.prior_advantage()},
          {"totals", s.totals()},
          {"margin", s.margin()},
          {"terminal", s.terminal()},
          {"transcript", transcript},
          {"version", s.transcript().size()}};
}

struct Session {
  long id = 0;
  int human_player = 0;
  GameState state;
  std::mutex mutex;
};

// In-memory sessions with monotonically assigned ids. Optionally writes one
// JSON snapshot per session into a directory after every change.
class SessionStore {
 public:
  explicit SessionStore(std::optional<std::filesystem::path> snapshot_dir =
                            std::nullopt)
      : snapshot_dir_(std::move(snapshot_dir)) {
    if (snapshot_dir_) std::filesystem::create_directories(*snapshot_dir_);
  }

  std::shared_ptr<Session> create(GameState state, int human_player) {
    std::lock_guard lock(mutex_);
    auto session = std::shared_ptr<Session>(
        new Session{next_id_++, human_player, std::move(state), {}});
    sessions_.emplace(session->id, session);
    return session;
  }

  std::shared_ptr<Session> find(long id) const {
    std::lock_guard lock(mutex_);
    auto it = sessions_.find(id);
    return it == sessions_.end() ? nullptr : it->second;
  }

  // Caller holds session.mutex.
  void snapshot(const Session& session) const {
    if (!snapshot_dir_) return;
    json doc = {{"id", session.id},
                {"human_player", session.human_player},
                {"state", state_json(session.state)}};
    std::ofstream out(*snapshot_dir_ /
                      ("session-" + std::to_string(session.id) + ".json"));
    out << doc.dump(2) << "\n";
  }

  // Restores every snapshot in the directory by replaying its transcript.
  int load_snapshots() {
    if (!snapshot_dir_) return 0;
    int loaded = 0;
    for (const auto& entry :
         std::filesystem::directory_iterator(*snapshot_dir_)) {
      if (entry.path().extension() != ".json") continue;
      std::ifstream in(entry.path());
      json doc = json::parse(in);
      const json& st = doc.at("state");
      std::vector<Action> transcript;
      for (const auto& a : st.at("transcript")) {
        transcript.push_back(action_from_json(a));
      }
      GameState state = replay(parse(st.at("initial").get<std::string>()),
                               st.at("prior_advantage").get<int>(), transcript);
      long id = doc.at("id").get<long>();
      std::lock_guard lock(mutex_);
      sessions_[id] = std::shared_ptr<Session>(new Session{
          id, doc.at("human_player").get<int>(), std::move(state), {}});
      next_id_ = std::max(next_id_, id + 1);
      ++loaded;
    }
    return loaded;
  }

 private:
  mutable std::mutex mutex_;
  std::map<long, std::shared_ptr<Session>> sessions_;
  long next_id_ = 1;
  std::optional<std::filesystem::path> snapshot_dir_;
};

struct ApiResponse {
  int status = 200;
  json body;
};

// Routes: POST /evaluate, POST /best-move, POST /sessions,
// POST /sessions/{id}/actions, GET /sessions/{id}, GET /health.
class Api {
 public:
  explicit Api(SessionStore& store, PolicyKind engine = PolicyKind::Optimal)
      : store_(store), engine_(engine) {}

  ApiResponse handle(const std::string& method, const std::string& path,
                     const std::string& body) {
    try {
      static const std::regex kSession(R"(^/sessions/(\d+)$)");
      static const std::regex kActions(R"(^/sessions/(\d+)/actions$)");
      std::smatch m;
      if (method == "GET" && path == "/health") {
        return {200, {{"status", "ok"}}};
      }
      if (method == "POST" && path == "/evaluate") {
        return {200, evaluation_json(evaluate(position_field(body)))};
      }
      if (method == "POST" && path == "/best-move") {
        Position pos = position_field(body);
        if (pos.empty()) throw EmptyPosition();
        return {200, rationale_json(opener_move(pos))};
      }
      if (method == "POST" && path == "/sessions") return create(body);
      if (method == "POST" && std::regex_match(path, m, kActions)) {
        return act(std::stol(m[1]), body);
      }
      if (method == "GET" && std::regex_match(path, m, kSession)) {
        auto session = store_.find(std::stol(m[1]));
        if (!session) return not_found(m[1]);
        std::lock_guard lock(session->mutex);
        return {200, session_json(*session)};
      }
      return {404, {{"error", "no route for " + method + " " + path}}};
    } catch (const json::exception& e) {
      return {400, {{"error", std::string("malformed JSON: ") + e.what()}}};
    } catch (const ParseError& e) {
      return {400, {{"error", e.what()}}};
    } catch (const EmptyPosition& e) {
      return {400, {{"error", e.what()}}};
    } catch (const IllegalAction& e) {
      return {409, {{"error", e.what()}}};
    }
  }

 private:
  static Position position_field(const std::string& body) {
    json j = json::parse(body);
    if (!j.is_object() || !j.contains("position") ||
        !j["position"].is_string()) {
      throw ParseError("request needs a 'position' string");
    }
    return parse(j["position"].get<std::string>());
  }

  static ApiResponse not_found(const std::string& id) {
    return {404, {{"error", "unknown session " + id}}};
  }

  static json session_json(const Session& s) {
    return {{"id", s.id},
            {"human_player", s.human_player},
            {"state", state_json(s.state)}};
  }

  // Engine moves until it is the human's turn or the game ends.
  json engine_turns(Session& s) {
    json replies = json::array();
    Match match(engine_, engine_);
    while (!s.state.terminal() && s.state.acting_player() != s.human_player) {
      Action a = match.choose(s.state);
      s.state = s.state.apply(a);
      replies.push_back(action_json(a));
    }
    return replies;
  }

  ApiResponse create(const std::string& body) {
    json j = json::parse(body);
    Position pos = position_field(body);
    int advantage = j.value("advantage", 0);
    std::string role = j.value("human_role", std::string("opener"));
    if (role != "opener" && role != "controller") {
      throw ParseError("human_role must be 'opener' or 'controller'");
    }
    auto session =
        store_.create(new_game(pos, advantage), role == "opener" ? 0 : 1);
    std::lock_guard lock(session->mutex);
    json replies = engine_turns(*session);
    store_.snapshot(*session);
    json out = session_json(*session);
    out["engine_reply"] = replies;
    return {200, out};
  }

  ApiResponse act(long id, const std::string& body) {
    auto session = store_.find(id);
    if (!session) return not_found(std::to_string(id));
    json j = json::parse(body);
    if (!j.is_object() || !j.contains("action")) {
      throw ParseError("request needs an 'action'");
    }
    Action action = action_from_json(j["action"]);
    std::lock_guard lock(session->mutex);
    if (j.contains("version") &&
        j["version"].get<std::size_t>() !=
            session->state.transcript().size()) {
      return {409, {{"error", "stale version"},
                    {"state", state_json(session->state)}}};
    }
    if (session->state.terminal()) throw IllegalAction("game is over");
    if (session->state.acting_player() != session->human_player) {
      throw IllegalAction("not your turn");
    }
    session->state = session->state.apply(action);
    json replies = engine_turns(*session);
    store_.snapshot(*session);
    json out = {{"state", state_json(session->state)},
                {"engine_reply", replies}};
    return {200, out};
  }

  SessionStore& store_;
  PolicyKind engine_;
};

}  // namespace dnb

#endif  // DNB_SERVICE_HPP_
