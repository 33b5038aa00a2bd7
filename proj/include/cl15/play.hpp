// Copyright 2026 The cl15 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Terminal play: a human acts as the environment against a strategy.

#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cl15/games.hpp"
#include "cl15/harness.hpp"
#include "cl15/runs.hpp"
#include "cl15/strategy.hpp"

namespace cl15 {

// Reads one answer per grant: a move, "pass" to decline, or "quit". Blank
// lines and lines with inner whitespace are rejected and asked again.
class HumanEnvironment final : public Environment {
 public:
  HumanEnvironment(std::istream& in, std::ostream& out, Game game) : in_(in), out_(out), game_(std::move(game)) {}

  std::optional<std::string> on_grant(const Run& visible) override {
    while (true) {
      out_ << "your move (move | pass | quit)> " << std::flush;
      std::string line;
      if (!std::getline(in_, line)) {
        halted_ = true;
        return std::nullopt;
      }
      const std::string t = trim(line);
      if (t == "quit") {
        halted_ = true;
        return std::nullopt;
      }
      if (t == "pass") {
        script_.push_back(std::nullopt);
        return std::nullopt;
      }
      if (t.empty() || t.find_first_of(" \t") != std::string::npos) {
        out_ << "malformed input, try again\n";
        continue;
      }
      if (!game_.legal(concat(visible, {bot(t)}))) {
        out_ << "warning: illegal move " << t << " recorded; the environment forfeits\n";
      }
      script_.push_back(t);
      return t;
    }
  }
  bool halted() const override { return halted_; }
  std::string name() const override { return "human"; }

  // The answers given so far, replayable through ScriptedEnvironment.
  const std::vector<std::optional<std::string>>& script() const { return script_; }

 private:
  std::istream& in_;
  std::ostream& out_;
  Game game_;
  std::vector<std::optional<std::string>> script_;
  bool halted_ = false;
};

struct PlaySession {
  SimulationResult result;
  std::vector<std::optional<std::string>> script;
};

inline PlaySession play_session(const Strategy& strategy, const Game& game, std::int64_t budget, std::istream& in,
                                std::ostream& out) {
  HumanEnvironment human(in, out, game);
  auto machine = strategy.instantiate();
  out << "you play the environment against " << strategy.describe() << "\n";
  auto show = [&](const Run& run) {
    out << (run.back().player == Player::kTop ? "machine: " : "you: ") << run.back().move << "\n";
    out << "position: " << show_run(run) << "\n";
  };
  PlaySession s;
  s.result = simulate(*machine, human, game, budget, show);
  s.script = human.script();
  for (const auto& d : s.result.diagnostics) out << d << "\n";
  out << "winner: " << player_char(s.result.winner) << " grants:" << s.result.grants << "\n";
  return s;
}

}  // namespace cl15
