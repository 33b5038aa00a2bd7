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

#include <random>

#include "cl15/harness.hpp"
#include "support.hpp"

namespace {

using namespace cl15;
using R = cl15::Run;

TEST(RandomGames, ShapeAndDeterminism) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const auto spec = random_finite_game(2, 2, rng);
    ASSERT_LE(spec.labels.size(), 7u);
    ASSERT_GE(spec.labels.size(), 2u);
    ASSERT_TRUE(validate_finite_game(spec).empty());
    for (const auto& [run, _] : spec.labels) {
      ASSERT_LE(run.size(), 2u);
      for (const auto& m : run) {
        ASSERT_TRUE(m.move == "a" || m.move == "b" || m.move == "c");
      }
    }
  }
  EXPECT_EQ(random_finite_interpretation({"P", "Q"}, 3, 2, 9), random_finite_interpretation({"P", "Q"}, 3, 2, 9));
  EXPECT_NE(random_finite_interpretation({"P"}, 3, 3, 1), random_finite_interpretation({"P"}, 3, 3, 2));
  EXPECT_THROW(random_finite_game(0, 2, rng), std::invalid_argument);
}

TEST(RandomMoves, ShapedAfterCirquent) {
  std::mt19937_64 rng(2);
  const auto c = parse_cirquent("oformulas: ?~P | P /\\ b!Q ; under: {1,2} ; over: {1}{1,2}");
  for (int i = 0; i < 100; ++i) {
    const auto m = parse_cell_move(random_cirquent_move(c, rng));
    ASSERT_TRUE(m);
    ASSERT_EQ(m->coords.size(), 2u);
    ASSERT_NE(m->coords[1], 0u);
    ASSERT_EQ(m->coords[0] == 0, m->oformula == 2);
  }
}

TEST(Loop, ShortlexOrder) {
  EXPECT_EQ(shortlex_bitstring(1), "");
  EXPECT_EQ(shortlex_bitstring(2), "0");
  EXPECT_EQ(shortlex_bitstring(3), "1");
  EXPECT_EQ(shortlex_bitstring(4), "00");
  EXPECT_EQ(shortlex_bitstring(7), "11");
  EXPECT_THROW(shortlex_bitstring(0), std::invalid_argument);
}

TEST(Loop, FirstMovesAgainstGranter) {
  GranterMachine m;
  LoopEnvironment env(3);
  const auto g = interpret_formula(separation_formula(), {{"P", make_enumeration_game([](const R&) { return false; })}});
  const auto r = simulate(m, env, g, 20);
  EXPECT_EQ(r.run, (R{bot("2..1"), bot("2.0.2"), bot("2.1.3")}));
  EXPECT_EQ(env.played(), (std::vector<std::uint64_t>{1, 2, 3}));
}

TEST(Loop, SkipsNumbersUsedByTheMachine) {
  LoopEnvironment env(2);
  EXPECT_EQ(env.on_grant({top("1.1.1"), top("1.4.2")}), "2..3");
  EXPECT_EQ(env.on_grant({top("1.1.1"), top("1.4.2"), bot("2..3"), top("1.2.4")}), "2.0.5");
  EXPECT_EQ(env.on_grant({}), std::nullopt);
  EXPECT_TRUE(env.quiescent());
  EXPECT_THROW(LoopEnvironment(0), std::invalid_argument);
}

TEST(Trials, BrokenStrategyLosesP1) {
  const auto proof = testing_support::load_proof("p1.proof");
  const auto spec = parse_finite_game(testing_support::read_fixture("games/lose-if-silent.game"));
  const Game g = interpret_cirquent(proof.steps.back().cirquent, {{"P", make_finite_game(spec)}});
  ScriptedEnvironment env({"1;1.1.a"});
  const auto bad = run_trial("granter", 7, granter_strategy(), g, env, 50);
  EXPECT_FALSE(bad.pass);
  EXPECT_EQ(bad.line(), "trial granter seed=7 winner=B pass=false");
  ScriptedEnvironment env2({"1;1.1.a"});
  const auto good = run_trial("p1", 7, extract_solution(proof), g, env2, 50);
  EXPECT_TRUE(good.pass) << good.result.render_trace();
  EXPECT_EQ(good.result.run, (R{bot("1;1.1.a"), top("1;1.2.a")}));
  EXPECT_EQ(trial_summary({bad, good}), "passed 1/2");
}

TEST(Trials, AdversaryNames) {
  const Game g = make_enumeration_game([](const R&) { return false; });
  auto gen = [](std::mt19937_64&) { return std::string("1"); };
  EXPECT_EQ(make_adversary(AdversaryKind::kSilent, g, gen, 1)->name(), "silent");
  EXPECT_EQ(make_adversary(AdversaryKind::kRandomLegal, g, gen, 1)->name(), "random-legal");
  EXPECT_EQ(make_adversary(AdversaryKind::kScripted, g, gen, 1)->name(), "scripted");
  EXPECT_EQ(adversary_name(AdversaryKind::kRandomLegal), "random");
}

TEST(Trials, RandomLegalEnvironmentStaysLegal) {
  const auto c = parse_cirquent("oformulas: ?~P | !P ; under: {1,2} ; over: {1,2}");
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Game g = interpret_cirquent(c, to_interpretation(random_finite_interpretation({"P"}, 3, 2, seed)));
    RandomLegalEnvironment env(g, [&](std::mt19937_64& e) { return random_cirquent_move(c, e); }, 5, seed);
    GranterMachine m;
    const auto r = simulate(m, env, g, 100);
    ASSERT_FALSE(r.offense) << r.render_trace();
    ASSERT_LE(r.run.size(), 5u);
  }
}

TEST(Separation, GranterK8) {
  const auto rep = separation_demo(granter_strategy(), 8, 200);
  EXPECT_EQ(rep.play.run.size(), 8u);
  EXPECT_TRUE(rep.omega.empty());
  EXPECT_TRUE(rep.distinct);
  ASSERT_TRUE(rep.witness);
  EXPECT_EQ(rep.final_winner, Player::kBot);
  EXPECT_TRUE(rep.consistent());
  EXPECT_NE(rep.render().find("consistent with non-validity at bound k=8"), std::string::npos);
}

TEST(Separation, GranterUpTo16) {
  for (std::size_t k = 1; k <= 16; ++k) {
    const auto rep = separation_demo(granter_strategy(), k, 400);
    ASSERT_TRUE(rep.consistent()) << rep.render();
  }
}

TEST(Separation, RotatingCopycat) {
  const auto rep = separation_demo(rotating_copycat_strategy(), 8, 200);
  EXPECT_EQ(rep.omega.size(), 8u);
  EXPECT_TRUE(rep.distinct);
  EXPECT_TRUE(rep.consistent()) << rep.render();
}

TEST(Separation, FormulaIsImplication) {
  EXPECT_EQ(render_formula(separation_formula()), "?~P \\/ b!P");
}

}  // namespace
