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

#include "cl15/games.hpp"
#include "cl15/harness.hpp"
#include "oracle.hpp"
#include "support.hpp"

namespace {

using namespace cl15;
using R = cl15::Run;
using testing_support::pick;

FiniteGameSpec lose_if_silent() { return parse_finite_game(testing_support::read_fixture("games/lose-if-silent.game")); }

TEST(FiniteGame, LabelsAndOffender) {
  const Game g = make_finite_game(lose_if_silent());
  EXPECT_EQ(g.winner({}), Player::kBot);
  EXPECT_EQ(g.winner({top("a")}), Player::kTop);
  EXPECT_EQ(g.winner({bot("a")}), Player::kTop);
  EXPECT_FALSE(g.legal({top("b")}));
  EXPECT_EQ(g.winner({top("b")}), Player::kBot);
  EXPECT_EQ(g.winner({bot("b")}), Player::kTop);
  const auto off = g.first_offense({top("a"), bot("a"), top("a")});
  ASSERT_TRUE(off);
  EXPECT_EQ(off->index, 1u);
  EXPECT_EQ(off->offender, Player::kBot);
}

TEST(FiniteGame, RejectsBrokenTrees) {
  FiniteGameSpec spec;
  spec.labels[R{top("a")}] = Player::kTop;
  EXPECT_THROW(make_finite_game(spec), SemanticError);
  spec.labels[R{}] = Player::kTop;
  EXPECT_NO_THROW(make_finite_game(spec));
  spec.labels[R{top("a"), bot("b"), top("c")}] = Player::kTop;
  EXPECT_THROW(make_finite_game(spec), SemanticError);
}

TEST(FiniteGame, TextFormat) {
  const auto spec = lose_if_silent();
  EXPECT_EQ(parse_finite_game(render_finite_game(spec)), spec);
  EXPECT_THROW(parse_finite_game("() => B"), ParseError);
  EXPECT_THROW(parse_finite_game("finitegame\n() => X"), ParseError);
  EXPECT_THROW(parse_finite_game("finitegame\n() => B\n() => T"), ParseError);
  EXPECT_THROW(parse_finite_game("finitegame\nT a => T"), ParseError);
}

TEST(EnumerationGame, NumeralMovesOnly) {
  const Game g = make_enumeration_game([](const R& r) { return r.size() == 1; });
  EXPECT_EQ(g.winner({}), Player::kTop);
  EXPECT_EQ(g.winner({bot("3")}), Player::kBot);
  EXPECT_EQ(g.winner({bot("3"), top("0")}), Player::kTop);
  EXPECT_EQ(g.winner({bot("x")}), Player::kTop);
  EXPECT_EQ(g.winner({top("01")}), Player::kBot);
}

TEST(Operators, NegationSwapsRoles) {
  const Game g = negation(make_finite_game(lose_if_silent()));
  EXPECT_EQ(g.winner({}), Player::kTop);
  EXPECT_EQ(g.winner({bot("a")}), Player::kBot);
  EXPECT_EQ(g.winner({top("b")}), Player::kBot);
}

TEST(Operators, ParallelAndRecurrences) {
  const Game p = make_finite_game(lose_if_silent());
  EXPECT_EQ(conjunction(p, p).winner({top("1.a")}), Player::kBot);
  EXPECT_EQ(conjunction(p, p).winner({top("1.a"), top("2.a")}), Player::kTop);
  EXPECT_EQ(disjunction(p, p).winner({top("2.a")}), Player::kTop);
  EXPECT_EQ(disjunction(p, p).winner({top("3.a")}), Player::kBot);
  // A recurrence always has an untouched copy, lost here by default.
  EXPECT_EQ(parallel_recurrence(p).winner({top("1.a"), top("2.a")}), Player::kBot);
  EXPECT_EQ(parallel_corecurrence(p).winner({top("7.a")}), Player::kTop);
  EXPECT_EQ(parallel_corecurrence(p).winner({top("0.a")}), Player::kBot);
  EXPECT_EQ(branching_recurrence(p).winner({top(".a")}), Player::kTop);
  EXPECT_EQ(branching_recurrence(p).winner({top("0.a")}), Player::kBot);
  EXPECT_EQ(branching_recurrence(p).winner({top("0.a"), top("1.a")}), Player::kTop);
  EXPECT_EQ(branching_corecurrence(p).winner({top("01.a")}), Player::kTop);
  EXPECT_EQ(branching_corecurrence(p).winner({top("2.a")}), Player::kBot);
}

TEST(Interpretation, UnmappedAtom) {
  EXPECT_THROW(interpret_formula(parse_formula("P /\\ Q"), {{"P", make_finite_game(lose_if_silent())}}),
               SemanticError);
}

// Random runs over the given alphabet of shaped moves.
R random_shaped_run(std::mt19937_64& rng, const std::vector<std::string>& heads, std::size_t max_len) {
  R r;
  const std::size_t n = pick(rng, 0, max_len);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string m = heads[pick(rng, 0, heads.size() - 1)] + base_alphabet()[pick(rng, 0, 2)];
    r.push_back({pick(rng, 0, 1) ? Player::kTop : Player::kBot, m});
  }
  return r;
}

TEST(DeMorgan, ExtensionalIdentities) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 60; ++i) {
    auto interp = to_interpretation(random_finite_interpretation({"A", "B"}, 2, 2, 100 + i));
    const Game a = interp.at("A"), b = interp.at("B");
    const std::vector<std::pair<Game, Game>> pairs{
        {negation(conjunction(a, b)), disjunction(negation(a), negation(b))},
        {negation(disjunction(a, b)), conjunction(negation(a), negation(b))},
        {negation(parallel_recurrence(a)), parallel_corecurrence(negation(a))},
        {negation(parallel_corecurrence(a)), parallel_recurrence(negation(a))},
        {negation(branching_recurrence(a)), branching_corecurrence(negation(a))},
        {negation(branching_corecurrence(a)), branching_recurrence(negation(a))},
        {negation(negation(a)), a},
    };
    const std::vector<std::vector<std::string>> heads{{"1.", "2."}, {"1.", "2."}, {"1.", "2.", "3."},
                                                      {"1.", "2.", "3."}, {".", "0.", "1.", "01."},
                                                      {".", "0.", "1.", "01."}, {""}};
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      for (int t = 0; t < 20; ++t) {
        const R r = random_shaped_run(rng, heads[k], 4);
        ASSERT_EQ(pairs[k].first.legal(r), pairs[k].second.legal(r)) << k << " " << show_run(r);
        ASSERT_EQ(pairs[k].first.winner(r), pairs[k].second.winner(r)) << k << " " << show_run(r);
      }
    }
  }
}

Cirquent axiom_p() { return parse_cirquent("oformulas: ~P | P ; under: {1,2} ; over: {1,2}"); }

TEST(CirquentGame, AxiomExamples) {
  const Game g = interpret_cirquent(axiom_p(), {{"P", make_finite_game(lose_if_silent())}});
  EXPECT_EQ(g.winner({}), Player::kTop);
  EXPECT_EQ(g.winner({bot("1;1.a")}), Player::kBot);
  EXPECT_EQ(g.winner({bot("1;1.a"), top("2;1.a")}), Player::kTop);
  EXPECT_EQ(g.winner({bot("1;1.a"), top("2;1.a"), bot("1;2.a")}), Player::kBot);
  EXPECT_FALSE(g.legal({top("1;0.m")}));
  EXPECT_EQ(g.winner({top("1;0.m")}), Player::kBot);
  EXPECT_EQ(g.winner({bot("3;1.a")}), Player::kTop);
  EXPECT_EQ(g.winner({bot("1;1,1.a")}), Player::kTop);
}

TEST(CirquentGame, RejectsInvalidCirquent) {
  Cirquent c = axiom_p();
  c.undergroups = {{0}};
  EXPECT_THROW(interpret_cirquent(c, {{"P", make_finite_game(lose_if_silent())}}), SemanticError);
}

TEST(CirquentGame, CopycatClosedRunsWin) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const auto spec = random_finite_game(3, 2, rng);
    const Game g = interpret_cirquent(axiom_p(), {{"P", make_finite_game(spec)}});
    // Walk a random path of the tree in a few copies and copy every move.
    R run;
    const std::size_t copies = pick(rng, 1, 3);
    for (std::size_t u = 1; u <= copies; ++u) {
      R path;
      while (true) {
        std::vector<Labmove> next;
        for (const auto& [r, _] : spec.labels) {
          if (r.size() == path.size() + 1 && std::equal(path.begin(), path.end(), r.begin())) next.push_back(r.back());
        }
        if (next.empty() || pick(rng, 0, 3) == 0) break;
        path.push_back(next[pick(rng, 0, next.size() - 1)]);
      }
      const std::string c = std::to_string(u);
      for (const auto& m : path) {
        if (m.player == Player::kBot) {
          run.push_back(bot("2;" + c + "." + m.move));
          run.push_back(top("1;" + c + "." + m.move));
        } else {
          run.push_back(bot("1;" + c + "." + m.move));
          run.push_back(top("2;" + c + "." + m.move));
        }
      }
    }
    ASSERT_TRUE(g.legal(run)) << show_run(run);
    ASSERT_EQ(g.winner(run), Player::kTop) << show_run(run);
  }
}

TEST(CirquentGame, ClubsuitMatchesParallelRecurrence) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 80; ++i) {
    const Formula f = testing_support::random_formula(rng, 2, {"P", "Q"});
    const auto interp = to_interpretation(random_finite_interpretation({"P", "Q"}, 2, 2, 300 + i));
    const Game cg = interpret_cirquent(clubsuit(f), interp);
    const Game pg = interpret_formula(Formula::pst(f), interp);
    for (int t = 0; t < 10; ++t) {
      R inner, outer;
      const std::size_t n = pick(rng, 0, 4);
      for (std::size_t k = 0; k < n; ++k) {
        const Player p = pick(rng, 0, 1) ? Player::kTop : Player::kBot;
        const std::string u = std::to_string(pick(rng, 1, 3));
        const std::string m = random_formula_move(f, rng);
        outer.push_back({p, "1;" + u + "." + m});
        inner.push_back({p, u + "." + m});
      }
      ASSERT_EQ(cg.winner(outer), pg.winner(inner)) << render_formula(f) << " " << show_run(outer);
    }
  }
}

TEST(Legality, PrefixClosed) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 150; ++i) {
    const Formula f = testing_support::random_formula(rng, 2, {"P", "Q"});
    const Game g = interpret_formula(f, to_interpretation(random_finite_interpretation({"P", "Q"}, 2, 2, i)));
    const R r = testing_support::random_run(rng, g, [&](std::mt19937_64& e) { return random_formula_move(f, e); }, 6);
    if (!g.legal(r)) continue;
    for (std::size_t n = 0; n < r.size(); ++n) ASSERT_TRUE(g.legal(prefix_of(r, n)));
  }
}

TEST(Oracle, FormulaWinnersAgree) {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 300; ++i) {
    const Formula f = testing_support::random_formula(rng, 2, {"P", "Q"});
    const auto fi = random_finite_interpretation({"P", "Q"}, 2, 2, 1000 + i);
    const Game g = interpret_formula(f, to_interpretation(fi));
    const R r = testing_support::random_run(rng, g, [&](std::mt19937_64& e) { return random_formula_move(f, e); }, 5);
    ASSERT_EQ(g.legal(r), oracle::legal(f, fi, r)) << render_formula(f) << " " << show_run(r);
    ASSERT_EQ(g.winner(r), oracle::winner(f, fi, r)) << render_formula(f) << " " << show_run(r);
  }
}

TEST(Oracle, CirquentWinnersAgree) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 150; ++i) {
    const Cirquent c = testing_support::random_cirquent(rng, 3, 1, {"P", "Q"});
    const auto fi = random_finite_interpretation(atoms_of(c), 2, 2, 2000 + i);
    const Game g = interpret_cirquent(c, to_interpretation(fi));
    const R r = testing_support::random_run(rng, g, [&](std::mt19937_64& e) { return random_cirquent_move(c, e); }, 5);
    ASSERT_EQ(g.winner(r), oracle::cirquent_winner(c, fi, r)) << render_cirquent(c) << " " << show_run(r);
  }
}

}  // namespace
