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

// Adversaries, random desk-scale interpretations, trials, and the bounded
// separation demonstration for !P -> b!P.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cl15/cirquent.hpp"
#include "cl15/formula.hpp"
#include "cl15/games.hpp"
#include "cl15/runs.hpp"
#include "cl15/strategy.hpp"

namespace cl15 {

// ---------------------------------------------------------------------------
// Random interpretations.

using FiniteInterpretation = std::map<std::string, FiniteGameSpec>;

inline Interpretation to_interpretation(const FiniteInterpretation& fi) {
  Interpretation out;
  for (const auto& [atom, spec] : fi) out.emplace(atom, make_finite_game(spec));
  return out;
}

inline const std::vector<std::string>& base_alphabet() {
  static const std::vector<std::string> kAlphabet{"a", "b", "c"};
  return kAlphabet;
}

// Random prefix-closed tree of depth <= d; the root has 1..b children and
// deeper positions 0..b. Every edge is a random labmove over {a,b,c}, every
// position gets a random winner.
inline FiniteGameSpec random_finite_game(std::size_t d, std::size_t b, std::mt19937_64& rng) {
  if (d == 0 || b == 0) throw std::invalid_argument("random game needs depth and branching >= 1");
  FiniteGameSpec spec;
  std::bernoulli_distribution coin(0.5);
  std::vector<Labmove> edges;
  for (Player p : {Player::kTop, Player::kBot}) {
    for (const auto& m : base_alphabet()) edges.push_back({p, m});
  }
  auto grow = [&](auto&& self, const Run& at, std::size_t depth) -> void {
    spec.labels[at] = coin(rng) ? Player::kTop : Player::kBot;
    if (depth == d) return;
    const std::size_t lo = at.empty() ? 1 : 0;
    const std::size_t children = std::uniform_int_distribution<std::size_t>(lo, std::min(b, edges.size()))(rng);
    std::vector<Labmove> pool = edges;
    std::shuffle(pool.begin(), pool.end(), rng);
    for (std::size_t i = 0; i < children; ++i) self(self, concat(at, {pool[i]}), depth + 1);
  };
  grow(grow, Run{}, 0);
  return spec;
}

inline FiniteInterpretation random_finite_interpretation(const std::set<std::string>& atoms, std::size_t d,
                                                         std::size_t b, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  FiniteInterpretation out;
  for (const auto& atom : atoms) out.emplace(atom, random_finite_game(d, b, rng));
  return out;
}

// ---------------------------------------------------------------------------
// Random moves shaped after a formula or cirquent (not necessarily legal).

inline std::string random_formula_move(const Formula& f, std::mt19937_64& rng) {
  auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  switch (f.kind()) {
    case Connective::kAtom:
    case Connective::kNegAtom: return base_alphabet()[pick(0, base_alphabet().size() - 1)];
    case Connective::kAnd:
    case Connective::kOr: {
      const bool left = pick(0, 1) == 0;
      return (left ? "1." : "2.") + random_formula_move(left ? f.left() : f.right(), rng);
    }
    case Connective::kPst:
    case Connective::kPcost: return std::to_string(pick(1, 3)) + "." + random_formula_move(f.body(), rng);
    case Connective::kSt:
    case Connective::kCost: {
      std::string w;
      for (std::size_t i = pick(0, 2); i > 0; --i) w += pick(0, 1) ? '1' : '0';
      return w + "." + random_formula_move(f.body(), rng);
    }
  }
  return "a";
}

inline std::string random_cirquent_move(const Cirquent& c, std::mt19937_64& rng) {
  const std::size_t a = std::uniform_int_distribution<std::size_t>(0, c.size() - 1)(rng);
  CellMove m;
  m.oformula = a + 1;
  for (const auto& o : c.overgroups) m.coords.push_back(o.count(a) ? std::uniform_int_distribution<std::uint64_t>(1, 2)(rng) : 0);
  m.rest = random_formula_move(c.oformulas[a], rng);
  return m.render();
}

// ---------------------------------------------------------------------------
// Environments.

class SilentEnvironment final : public Environment {
 public:
  std::optional<std::string> on_grant(const Run&) override { return std::nullopt; }
  bool quiescent() const override { return true; }
  std::string name() const override { return "silent"; }
};

// Answers the i-th grant with script[i]; nullopt entries decline. With
// halt_when_done the play stops at the first grant past the script instead
// of going quiet.
class ScriptedEnvironment final : public Environment {
 public:
  explicit ScriptedEnvironment(std::vector<std::optional<std::string>> script, bool halt_when_done = false)
      : script_(std::move(script)), halt_when_done_(halt_when_done) {}

  std::optional<std::string> on_grant(const Run&) override {
    if (pos_ < script_.size()) return script_[pos_++];
    if (halt_when_done_) halted_ = true;
    return std::nullopt;
  }
  bool quiescent() const override { return !halt_when_done_ && pos_ >= script_.size(); }
  bool halted() const override { return halted_; }
  std::string name() const override { return "scripted"; }

 private:
  std::vector<std::optional<std::string>> script_;
  bool halt_when_done_;
  std::size_t pos_ = 0;
  bool halted_ = false;
};

// Plays random moves that keep the run legal, at most max_moves of them.
class RandomLegalEnvironment final : public Environment {
 public:
  RandomLegalEnvironment(Game game, std::function<std::string(std::mt19937_64&)> gen, std::size_t max_moves,
                         std::uint64_t seed, std::size_t tries = 24)
      : game_(std::move(game)), gen_(std::move(gen)), max_moves_(max_moves), rng_(seed), tries_(tries) {}

  std::optional<std::string> on_grant(const Run& visible) override {
    if (quiescent()) return std::nullopt;
    ++grants_;
    for (std::size_t t = 0; t < tries_; ++t) {
      std::string m = gen_(rng_);
      if (game_.legal(concat(visible, {bot(m)}))) {
        ++made_;
        return m;
      }
    }
    return std::nullopt;
  }
  bool quiescent() const override { return made_ >= max_moves_ || grants_ >= 4 * max_moves_; }
  std::string name() const override { return "random-legal"; }

 private:
  Game game_;
  std::function<std::string(std::mt19937_64&)> gen_;
  std::size_t max_moves_;
  std::mt19937_64 rng_;
  std::size_t tries_;
  std::size_t made_ = 0;
  std::size_t grants_ = 0;
};

// Script of environment moves, each legal after the previous ones when the
// machine stays silent.
inline std::vector<std::optional<std::string>> random_legal_script(
    const Game& game, const std::function<std::string(std::mt19937_64&)>& gen, std::size_t length,
    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::optional<std::string>> script;
  Run run;
  for (std::size_t i = 0; i < length; ++i) {
    for (int t = 0; t < 24; ++t) {
      std::string m = gen(rng);
      if (game.legal(concat(run, {bot(m)}))) {
        run.push_back(bot(m));
        script.push_back(m);
        break;
      }
    }
  }
  return script;
}

// i-th finite bitstring in shortlex order, i >= 1: "", "0", "1", "00", ...
inline std::string shortlex_bitstring(std::uint64_t i) {
  if (i == 0) throw std::invalid_argument("shortlex index starts at 1");
  std::string bits;
  for (; i > 1; i >>= 1) bits.insert(bits.begin(), (i & 1) ? '1' : '0');
  return bits;
}

// Environment for !P -> b!P written as ?~P \/ b!P: on the i-th grant
// (i <= k) it plays "2.w.u" with w the i-th bitstring and u a number not yet
// used by either player in any copy or thread of P.
class LoopEnvironment final : public Environment {
 public:
  explicit LoopEnvironment(std::size_t k) : k_(k) {
    if (k == 0) throw std::invalid_argument("loop adversary needs k >= 1");
  }

  std::optional<std::string> on_grant(const Run& visible) override {
    if (i_ >= k_) return std::nullopt;
    ++i_;
    std::set<std::uint64_t> used;
    for (const auto& m : visible) {
      auto outer = split_head(m.move);
      if (!outer) continue;
      auto inner = split_head(outer->second);
      if (!inner) continue;
      if (auto v = parse_natural(inner->second)) used.insert(*v);
    }
    do {
      ++counter_;
    } while (used.count(counter_));
    played_.push_back(counter_);
    return "2." + shortlex_bitstring(i_) + "." + std::to_string(counter_);
  }
  bool quiescent() const override { return i_ >= k_; }
  std::string name() const override { return "loop"; }

  const std::vector<std::uint64_t>& played() const { return played_; }

 private:
  std::size_t k_;
  std::size_t i_ = 0;
  std::uint64_t counter_ = 0;
  std::vector<std::uint64_t> played_;
};

// ---------------------------------------------------------------------------
// Trials.

struct TrialReport {
  std::string id;
  std::uint64_t seed = 0;
  std::string game;
  std::string adversary;
  std::int64_t budget = 0;
  SimulationResult result;
  bool pass = false;

  std::string line() const {
    return "trial " + id + " seed=" + std::to_string(seed) + " winner=" + player_char(result.winner) +
           " pass=" + (pass ? "true" : "false");
  }
};

inline TrialReport run_trial(const std::string& id, std::uint64_t seed, const Strategy& strategy, const Game& game,
                             Environment& env, std::int64_t budget) {
  auto machine = strategy.instantiate();
  TrialReport t;
  t.id = id;
  t.seed = seed;
  t.game = game.describe();
  t.adversary = env.name();
  t.budget = budget;
  t.result = simulate(*machine, env, game, budget);
  t.pass = t.result.winner == Player::kTop;
  return t;
}

inline std::string trial_summary(const std::vector<TrialReport>& reports) {
  std::size_t passed = 0;
  for (const auto& r : reports) passed += r.pass ? 1 : 0;
  return "passed " + std::to_string(passed) + "/" + std::to_string(reports.size());
}

enum class AdversaryKind { kSilent, kRandomLegal, kScripted };

inline std::string adversary_name(AdversaryKind k) {
  switch (k) {
    case AdversaryKind::kSilent: return "silent";
    case AdversaryKind::kRandomLegal: return "random";
    case AdversaryKind::kScripted: return "scripted";
  }
  return "?";
}

inline std::unique_ptr<Environment> make_adversary(AdversaryKind kind, const Game& game,
                                                   std::function<std::string(std::mt19937_64&)> gen,
                                                   std::uint64_t seed, std::size_t moves = 6) {
  switch (kind) {
    case AdversaryKind::kSilent: return std::make_unique<SilentEnvironment>();
    case AdversaryKind::kRandomLegal: return std::make_unique<RandomLegalEnvironment>(game, std::move(gen), moves, seed);
    case AdversaryKind::kScripted:
      return std::make_unique<ScriptedEnvironment>(random_legal_script(game, gen, moves, seed));
  }
  return nullptr;
}

// ---------------------------------------------------------------------------
// Machines used by the separation demo.

// Answers each environment move "2.w.u" with "1.n.u", n cycling 1, 2, 3.
class RotatingCopycatMachine final : public Machine {
 public:
  Action next(const Run& visible, std::size_t) override {
    for (; seen_ < visible.size(); ++seen_) {
      if (visible[seen_].player != Player::kBot) continue;
      auto outer = split_head(visible[seen_].move);
      if (!outer || outer->first != "2") continue;
      auto inner = split_head(outer->second);
      if (!inner) continue;
      pending_.push_back("1." + std::to_string(copy_) + "." + std::string(inner->second));
      copy_ = copy_ % 3 + 1;
    }
    if (pending_.empty()) return Grant{};
    std::string m = std::move(pending_.front());
    pending_.pop_front();
    return MakeMove{std::move(m)};
  }

 private:
  std::size_t seen_ = 0;
  std::uint64_t copy_ = 1;
  std::deque<std::string> pending_;
};

inline Strategy rotating_copycat_strategy() {
  return Strategy("rotating-copycat", [] { return std::make_unique<RotatingCopycatMachine>(); });
}

// ---------------------------------------------------------------------------
// Separation demo.

inline Formula separation_formula() { return parse_formula("!P -> b!P"); }

struct SeparationReport {
  std::size_t k = 0;
  SimulationResult play;
  Run omega;  // moves in ?~P
  Run gamma;  // moves in b!P
  std::vector<InfiniteBitstring> threads;
  bool distinct = false;
  std::optional<InfiniteBitstring> witness;
  Run witness_run;  // gamma projected on the witness thread
  std::optional<Player> final_winner;
  std::vector<std::uint64_t> loop_numbers;

  bool consistent() const { return distinct && witness && final_winner == Player::kBot; }

  std::string render() const {
    std::string out;
    out += "delta: " + show_run(play.run) + "\n";
    out += "omega: " + show_run(omega) + "\n";
    out += "gamma: " + show_run(gamma) + "\n";
    out += "threads: " + std::to_string(threads.size()) + " representatives, pairwise distinct: " +
           (distinct ? "yes" : "no") + "\n";
    if (witness) {
      out += "witness y: " + witness->show() + "\n";
      out += "interpretation: P = enumeration game lost by the environment exactly on " + show_run(witness_run) +
             "\n";
      out += std::string("final position won by: ") + player_char(*final_winner) + "\n";
    } else {
      out += "witness y: none among touched representatives\n";
    }
    out += consistent() ? "consistent with non-validity at bound k=" + std::to_string(k) + "\n"
                        : "inconclusive at bound k=" + std::to_string(k) + "\n";
    return out;
  }
};

inline SeparationReport separation_demo(const Strategy& machine, std::size_t k, std::int64_t budget) {
  SeparationReport rep;
  rep.k = k;
  const Formula f = separation_formula();
  Interpretation neutral{{"P", make_enumeration_game([](const Run&) { return false; })}};
  auto m = machine.instantiate();
  LoopEnvironment loop(k);
  rep.play = simulate(*m, loop, interpret_formula(f, neutral), budget);
  rep.loop_numbers = loop.played();
  rep.omega = project_prefix(rep.play.run, "1.");
  rep.gamma = project_prefix(rep.play.run, "2.");

  rep.threads = thread_representatives(touched_bitstrings(rep.gamma));
  std::vector<Run> projections;
  for (const auto& x : rep.threads) projections.push_back(project_branch(rep.gamma, x));
  rep.distinct = true;
  for (std::size_t i = 0; i < projections.size() && rep.distinct; ++i) {
    for (std::size_t j = i + 1; j < projections.size(); ++j) {
      if (projections[i] == projections[j]) {
        rep.distinct = false;
        break;
      }
    }
  }

  std::vector<Run> negated_copies;
  if (auto copies = detail::touched_copies(rep.omega)) {
    for (const auto& v : *copies) negated_copies.push_back(negate_run(project_prefix(rep.omega, v + ".")));
  }
  for (std::size_t i = 0; i < rep.threads.size(); ++i) {
    const Run& candidate = projections[i];
    if (candidate.empty()) continue;
    if (std::find(negated_copies.begin(), negated_copies.end(), candidate) != negated_copies.end()) continue;
    rep.witness = rep.threads[i];
    rep.witness_run = candidate;
    break;
  }
  if (rep.witness) {
    const Run target = rep.witness_run;
    Interpretation induced{{"P", make_enumeration_game([target](const Run& r) { return r == target; })}};
    rep.final_winner = interpret_formula(f, induced).winner(rep.play.run);
  }
  return rep;
}

}  // namespace cl15
