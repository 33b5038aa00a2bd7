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

#include <gtest/gtest.h>

#include <sstream>

#include "cl15/play.hpp"
#include "support.hpp"

namespace {

using namespace cl15;
using R = cl15::Run;

struct P1 {
  Proof proof = testing_support::load_proof("p1.proof");
  Game game = interpret_cirquent(
      proof.steps.back().cirquent,
      {{"P", make_finite_game(parse_finite_game(testing_support::read_fixture("games/lose-if-silent.game")))}});
  Strategy strategy = extract_solution(proof);
};

TEST(Play, QuitImmediately) {
  P1 p;
  std::istringstream in("quit\n");
  std::ostringstream out;
  const auto s = play_session(p.strategy, p.game, 50, in, out);
  EXPECT_TRUE(s.result.run.empty());
  EXPECT_TRUE(s.script.empty());
  EXPECT_EQ(s.result.winner, Player::kTop);
  EXPECT_NE(out.str().find("winner: T grants:1"), std::string::npos) << out.str();
}

TEST(Play, MachineAnswersMove) {
  P1 p;
  std::istringstream in("1;1.1.a\nquit\n");
  std::ostringstream out;
  const auto s = play_session(p.strategy, p.game, 50, in, out);
  EXPECT_EQ(s.result.run, (R{bot("1;1.1.a"), top("1;1.2.a")}));
  EXPECT_EQ(s.result.winner, Player::kTop);
  EXPECT_NE(out.str().find("you: 1;1.1.a\n"), std::string::npos);
  EXPECT_NE(out.str().find("machine: 1;1.2.a\n"), std::string::npos);
  EXPECT_NE(out.str().find("position: <B1;1.1.a,T1;1.2.a>"), std::string::npos) << out.str();
}

TEST(Play, MalformedInputIsAskedAgain) {
  P1 p;
  std::istringstream in("\n1;1 .1.a\npass\nquit\n");
  std::ostringstream out;
  const auto s = play_session(p.strategy, p.game, 50, in, out);
  EXPECT_TRUE(s.result.run.empty());
  EXPECT_EQ(s.script, (std::vector<std::optional<std::string>>{std::nullopt}));
  const std::string text = out.str();
  std::size_t count = 0;
  for (std::size_t at = text.find("malformed input"); at != std::string::npos; at = text.find("malformed input", at + 1)) {
    ++count;
  }
  EXPECT_EQ(count, 2u);
}

TEST(Play, IllegalMoveIsWarnedAndForfeits) {
  P1 p;
  std::istringstream in("9;1.a\nquit\n");
  std::ostringstream out;
  const auto s = play_session(p.strategy, p.game, 50, in, out);
  EXPECT_NE(out.str().find("warning: illegal move 9;1.a"), std::string::npos);
  EXPECT_EQ(s.result.winner, Player::kTop);
}

TEST(Play, EndOfInputHalts) {
  P1 p;
  std::istringstream in("1;1.2.a\n");
  std::ostringstream out;
  const auto s = play_session(p.strategy, p.game, 50, in, out);
  EXPECT_EQ(s.result.run.size(), 2u);
}

TEST(Play, TranscriptReplays) {
  P1 p;
  std::istringstream in("1;1.1.a\npass\n1;2.2.a\nquit\n");
  std::ostringstream out;
  const auto s = play_session(p.strategy, p.game, 50, in, out);
  ScriptedEnvironment replay(s.script, true);
  auto m = p.strategy.instantiate();
  const auto r = simulate(*m, replay, p.game, 50);
  EXPECT_EQ(r.run, s.result.run);
  EXPECT_EQ(r.winner, s.result.winner);
}

}  // namespace
