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

// dnb: evaluate, explore, play and verify loop-and-long-chain endgames.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "dnb/engine.hpp"
#include "dnb/http_server.hpp"
#include "dnb/oracle.hpp"
#include "dnb/position.hpp"
#include "dnb/service.hpp"
#include "dnb/strategy.hpp"
#include "dnb/verify.hpp"

namespace {

std::string move_text(const dnb::OpenerRationale& r) {
  return "open " + r.chosen.to_string() + " (" + dnb::describe(r.rule) + ")";
}

int run_eval(const std::string& text) {
  auto e = dnb::evaluate(dnb::parse(text));
  const auto& m = e.measures;
  std::cout << "position: " << e.position.to_string() << "\n"
            << "size=" << m.size << " theta=" << m.theta << " f=" << m.f
            << " s=" << m.s << " chains=" << m.num_chains
            << " loops=" << m.num_loops << " tb=" << m.tb << " c=" << m.c
            << " v=" << e.value << (e.searched ? "" : " (closed form)")
            << "\n";
  for (const auto& w : e.per_component) {
    std::cout << "  open " << w.component.to_string()
              << ": v(G;C)=" << w.value_given_open
              << ", controller " << dnb::to_string(w.controller_reply)
              << (w.value_given_open == e.value ? "  *optimal" : "") << "\n";
  }
  std::cout << "best move: " << move_text(e.best) << "\n";
  return 0;
}

int run_best_move(const std::string& text) {
  dnb::Position pos = dnb::parse(text);
  std::cout << move_text(dnb::opener_move(pos)) << "\n";
  return 0;
}

int run_lines(const std::string& text, std::size_t limit) {
  dnb::Position pos = dnb::parse(text);
  dnb::Oracle oracle;
  auto lines = oracle.enumerate_optimal_lines(pos);
  std::cout << lines.size() << " optimal line(s) for " << pos.to_string()
            << " (value " << oracle.value(pos) << ")\n";
  for (std::size_t i = 0; i < lines.size() && i < limit; ++i) {
    std::string row;
    for (const auto& c : lines[i]) {
      if (!row.empty()) row += ", ";
      row += c.to_string();
    }
    std::cout << "  " << row << "\n";
  }
  if (lines.size() > limit) {
    std::cout << "  ... " << lines.size() - limit << " more\n";
  }
  return 0;
}

void print_state(const dnb::GameState& s, int human) {
  auto name = [&](int p) { return p == human ? "you" : "engine"; };
  std::cout << "remaining: " << s.remaining().to_string();
  if (s.pending()) std::cout << "   opened: " << s.pending()->to_string();
  auto totals = s.totals();
  std::cout << "\nscore: you " << totals[human] << ", engine "
            << totals[1 - human] << "   (opener: " << name(s.opener())
            << ")\n";
}

int run_play(const std::string& text, int advantage, const std::string& as,
             const std::string& engine_name) {
  dnb::Position pos = dnb::parse(text);
  const int human = as == "controller" ? 1 : 0;
  dnb::PolicyKind engine = dnb::parse_policy_kind(engine_name);
  dnb::Match match(engine, engine);
  dnb::GameState s = dnb::new_game(pos, advantage);
  std::cout << "commands: open <component> | keep | give | hint | quit\n";
  std::string line;
  while (!s.terminal()) {
    if (s.acting_player() != human) {
      dnb::Action a = match.choose(s);
      std::cout << "engine: " << a.to_string() << "\n";
      s = s.apply(a);
      continue;
    }
    print_state(s, human);
    std::cout << (s.to_act() == dnb::ToAct::OpenerToOpen ? "open> "
                                                         : "keep/give> ")
              << std::flush;
    if (!std::getline(std::cin, line)) return 1;
    if (line == "quit" || line == "q") return 0;
    if (line == "hint") {
      if (s.to_act() == dnb::ToAct::OpenerToOpen) {
        std::cout << "hint: " << move_text(dnb::opener_move(s.remaining()))
                  << "\n";
      } else {
        std::cout << "hint: "
                  << dnb::to_string(dnb::controller_decision(s.remaining(),
                                                             *s.pending()))
                  << "\n";
      }
      continue;
    }
    try {
      std::string cmd = line;
      if (s.to_act() == dnb::ToAct::OpenerToOpen && !cmd.empty() &&
          std::isdigit(static_cast<unsigned char>(cmd[0]))) {
        cmd = "open " + cmd;
      }
      s = s.apply(dnb::Action::parse(cmd));
    } catch (const dnb::Error& e) {
      std::cout << "error: " << e.what() << "\n";
    }
  }
  auto totals = s.totals();
  std::cout << "game over: you " << totals[human] << ", engine "
            << totals[1 - human] << "\n";
  return 0;
}

int run_verify(int max_size, bool as_json, int samples, std::uint64_t seed,
               int sample_max_size) {
  dnb::Oracle oracle;
  std::vector<dnb::VerifyReport> reports;
  reports.push_back(dnb::check_worked_examples());
  reports.push_back(dnb::check_equivalence(max_size, oracle));
  reports.push_back(dnb::check_invariants(max_size, oracle));
  reports.push_back(dnb::check_controlled_value(max_size, oracle));
  if (samples > 0) {
    reports.push_back(dnb::check_sampled(seed, samples, sample_max_size));
  }
  bool ok = true;
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& r : reports) {
    ok = ok && r.passed();
    if (as_json) {
      doc.push_back(dnb::to_json(r));
    } else {
      std::cout << dnb::summary(r);
    }
  }
  if (as_json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& name : reports[1].uncovered()) {
      std::cout << "note: case " << name << " never hit at this size\n";
    }
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact values and optimal play for loop-and-long-chain "
               "Dots & Boxes endgames"};
  app.require_subcommand(1);

  std::string position;
  auto* eval = app.add_subcommand("eval", "measures, value and what-if values");
  eval->add_option("position", position, "e.g. 3+4l+8l")->required();

  auto* best = app.add_subcommand("best-move", "optimal component to open");
  best->add_option("position", position)->required();

  std::size_t limit = 1000;
  auto* lines = app.add_subcommand("lines", "all optimal opening orders");
  lines->add_option("position", position)->required();
  lines->add_option("--limit", limit, "lines to print");

  int advantage = 0;
  std::string as = "opener";
  std::string engine = "optimal";
  auto* play = app.add_subcommand("play", "play against the engine");
  play->add_option("position", position)->required();
  play->add_option("--advantage", advantage, "boxes banked before the endgame");
  play->add_option("--as", as, "your role")
      ->check(CLI::IsMember({"opener", "controller"}));
  play->add_option("--engine", engine, "engine policy")
      ->check(CLI::IsMember({"optimal", "oracle", "committed"}));

  int max_size = 36;
  bool as_json = false;
  int samples = 0;
  std::uint64_t seed = 1;
  int sample_max_size = 200;
  auto* verify = app.add_subcommand("verify", "check closed forms vs oracle");
  verify->add_option("--max-size", max_size, "largest position size")
      ->check(CLI::Range(0, 60));
  verify->add_flag("--json", as_json, "machine-readable report");
  verify->add_option("--sample", samples, "random large positions to check");
  verify->add_option("--seed", seed, "sampling seed");
  verify->add_option("--sample-max-size", sample_max_size)
      ->check(CLI::Range(3, 200));

  int port = 8080;
  if (const char* env = std::getenv("PORT")) port = std::atoi(env);
  std::string host = "127.0.0.1";
  std::string session_dir;
  auto* serve = app.add_subcommand("serve", "start the HTTP API");
  serve->add_option("--port", port, "listen port (default $PORT or 8080)");
  serve->add_option("--host", host);
  serve->add_option("--session-dir", session_dir,
                    "write session snapshots here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*eval) return run_eval(position);
    if (*best) return run_best_move(position);
    if (*lines) return run_lines(position, limit);
    if (*play) return run_play(position, advantage, as, engine);
    if (*verify) {
      return run_verify(max_size, as_json, samples, seed, sample_max_size);
    }
    if (*serve) {
      std::optional<std::filesystem::path> dir;
      if (!session_dir.empty()) dir = session_dir;
      dnb::SessionStore store(dir);
      int restored = store.load_snapshots();
      dnb::Api api(store);
      std::cerr << "listening on " << host << ":" << port;
      if (restored > 0) std::cerr << " (" << restored << " sessions restored)";
      std::cerr << std::endl;
      return dnb::serve(api, host, port) ? 0 : 1;
    }
  } catch (const dnb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
