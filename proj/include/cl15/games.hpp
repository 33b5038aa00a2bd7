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

// Constant games as (legality, winner) pairs over finite runs, the seven
// game operators, desk-scale base games, and the games of formulas and
// cirquents under an interpretation.
//
// A finite run touches finitely many copies (!, ?), threads (b!, b?) and
// cells (cirquents). Every untouched one carries the empty run, so the
// "for all"/"for some" winner clauses are decided on the touched ones plus
// one representative of the untouched ones.

#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cl15/cirquent.hpp"
#include "cl15/error.hpp"
#include "cl15/formula.hpp"
#include "cl15/runs.hpp"

namespace cl15 {

class GameImpl {
 public:
  virtual ~GameImpl() = default;
  virtual bool legal(const Run& run) const = 0;
  // Winner of a run already known to be legal.
  virtual Player legal_winner(const Run& run) const = 0;
  virtual std::string describe() const = 0;
};

struct Offense {
  std::size_t index;  // position of the offending labmove in the run
  Player offender;
};

class Game {
 public:
  explicit Game(std::shared_ptr<const GameImpl> impl) : impl_(std::move(impl)) {}

  bool legal(const Run& run) const { return impl_->legal(run); }

  // Locates the shortest illegal prefix. Legality is prefix-closed, so a
  // binary search over prefix lengths suffices.
  std::optional<Offense> first_offense(const Run& run) const {
    if (legal(run)) return std::nullopt;
    std::size_t lo = 0, hi = run.size();  // prefix(lo) legal, prefix(hi) illegal
    while (hi - lo > 1) {
      const std::size_t mid = lo + (hi - lo) / 2;
      if (legal(prefix_of(run, mid))) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return Offense{hi - 1, run[hi - 1].player};
  }

  Player winner(const Run& run) const {
    if (auto off = first_offense(run)) return opponent(off->offender);
    return impl_->legal_winner(run);
  }

  std::string describe() const { return impl_->describe(); }

 private:
  std::shared_ptr<const GameImpl> impl_;
};

// ---------------------------------------------------------------------------
// Base games.

// Finite game: a prefix-closed set of legal runs with a winner label on each.
struct FiniteGameSpec {
  std::map<Run, Player> labels;

  friend bool operator==(const FiniteGameSpec&, const FiniteGameSpec&) = default;
};

inline std::vector<std::string> validate_finite_game(const FiniteGameSpec& spec) {
  std::vector<std::string> v;
  if (!spec.labels.count(Run{})) v.push_back("missing label for the empty run");
  for (const auto& [run, _] : spec.labels) {
    if (!run.empty() && !spec.labels.count(prefix_of(run, run.size() - 1))) {
      v.push_back("tree is not prefix-closed at " + show_run(run));
    }
  }
  return v;
}

namespace detail {

class FiniteGame final : public GameImpl {
 public:
  explicit FiniteGame(FiniteGameSpec spec) : spec_(std::move(spec)) {}
  bool legal(const Run& run) const override { return spec_.labels.count(run) > 0; }
  Player legal_winner(const Run& run) const override { return spec_.labels.at(run); }
  std::string describe() const override {
    return "finitegame(" + std::to_string(spec_.labels.size()) + " positions)";
  }

 private:
  FiniteGameSpec spec_;
};

class EnumerationGame final : public GameImpl {
 public:
  explicit EnumerationGame(std::function<bool(const Run&)> loses) : loses_(std::move(loses)) {}
  bool legal(const Run& run) const override {
    for (const auto& m : run) {
      if (!parse_natural(m.move)) return false;
    }
    return true;
  }
  Player legal_winner(const Run& run) const override { return loses_(run) ? Player::kBot : Player::kTop; }
  std::string describe() const override { return "enumeration-game"; }

 private:
  std::function<bool(const Run&)> loses_;
};

class NegationGame final : public GameImpl {
 public:
  explicit NegationGame(Game a) : a_(std::move(a)) {}
  bool legal(const Run& run) const override { return a_.legal(negate_run(run)); }
  Player legal_winner(const Run& run) const override { return opponent(a_.winner(negate_run(run))); }
  std::string describe() const override { return "~(" + a_.describe() + ")"; }

 private:
  Game a_;
};

class ParallelGame final : public GameImpl {
 public:
  ParallelGame(bool conjunctive, Game a, Game b)
      : conjunctive_(conjunctive), a_(std::move(a)), b_(std::move(b)) {}

  bool legal(const Run& run) const override {
    for (const auto& m : run) {
      if (m.move.rfind("1.", 0) != 0 && m.move.rfind("2.", 0) != 0) return false;
    }
    return a_.legal(project_prefix(run, "1.")) && b_.legal(project_prefix(run, "2."));
  }
  Player legal_winner(const Run& run) const override {
    const bool wa = a_.winner(project_prefix(run, "1.")) == Player::kTop;
    const bool wb = b_.winner(project_prefix(run, "2.")) == Player::kTop;
    const bool won = conjunctive_ ? (wa && wb) : (wa || wb);
    return won ? Player::kTop : Player::kBot;
  }
  std::string describe() const override {
    return "(" + a_.describe() + (conjunctive_ ? " /\\ " : " \\/ ") + b_.describe() + ")";
  }

 private:
  bool conjunctive_;
  Game a_, b_;
};

// Distinct copy numbers u of the moves "u.alpha"; nullopt if some move has
// another shape.
inline std::optional<std::set<std::string>> touched_copies(const Run& run) {
  std::set<std::string> out;
  for (const auto& m : run) {
    auto parts = split_head(m.move);
    if (!parts || !is_positive_decimal(parts->first)) return std::nullopt;
    out.insert(std::string(parts->first));
  }
  return out;
}

class RecurrenceGame final : public GameImpl {
 public:
  RecurrenceGame(bool recurrence, Game a) : recurrence_(recurrence), a_(std::move(a)) {}

  bool legal(const Run& run) const override {
    auto copies = touched_copies(run);
    if (!copies) return false;
    for (const auto& u : *copies) {
      if (!a_.legal(project_prefix(run, u + "."))) return false;
    }
    return true;
  }
  Player legal_winner(const Run& run) const override {
    // Infinitely many copies are untouched and carry the empty run.
    bool any = a_.winner(Run{}) == Player::kTop;
    bool all = any;
    const auto copies = touched_copies(run);
    for (const auto& u : *copies) {
      const bool w = a_.winner(project_prefix(run, u + ".")) == Player::kTop;
      any = any || w;
      all = all && w;
    }
    return (recurrence_ ? all : any) ? Player::kTop : Player::kBot;
  }
  std::string describe() const override { return (recurrence_ ? "!" : "?") + a_.describe(); }

 private:
  bool recurrence_;
  Game a_;
};

class BranchingGame final : public GameImpl {
 public:
  BranchingGame(bool recurrence, Game a) : recurrence_(recurrence), a_(std::move(a)) {}

  bool legal(const Run& run) const override {
    for (const auto& m : run) {
      auto parts = split_head(m.move);
      if (!parts || !is_bitstring(parts->first)) return false;
    }
    for (const auto& x : thread_representatives(touched_bitstrings(run))) {
      if (!a_.legal(project_branch(run, x))) return false;
    }
    return true;
  }
  Player legal_winner(const Run& run) const override {
    bool any = false, all = true;
    for (const auto& x : thread_representatives(touched_bitstrings(run))) {
      const bool w = a_.winner(project_branch(run, x)) == Player::kTop;
      any = any || w;
      all = all && w;
    }
    return (recurrence_ ? all : any) ? Player::kTop : Player::kBot;
  }
  std::string describe() const override { return (recurrence_ ? "b!" : "b?") + a_.describe(); }

 private:
  bool recurrence_;
  Game a_;
};

}  // namespace detail

inline Game make_finite_game(FiniteGameSpec spec) {
  auto problems = validate_finite_game(spec);
  if (!problems.empty()) throw SemanticError("invalid finite game: " + problems.front());
  return Game(std::make_shared<detail::FiniteGame>(std::move(spec)));
}

// Every run of decimal numerals is legal; loses(run) selects the runs won by
// the environment.
inline Game make_enumeration_game(std::function<bool(const Run&)> loses) {
  return Game(std::make_shared<detail::EnumerationGame>(std::move(loses)));
}

inline Game negation(Game a) { return Game(std::make_shared<detail::NegationGame>(std::move(a))); }
inline Game conjunction(Game a, Game b) {
  return Game(std::make_shared<detail::ParallelGame>(true, std::move(a), std::move(b)));
}
inline Game disjunction(Game a, Game b) {
  return Game(std::make_shared<detail::ParallelGame>(false, std::move(a), std::move(b)));
}
inline Game parallel_recurrence(Game a) {
  return Game(std::make_shared<detail::RecurrenceGame>(true, std::move(a)));
}
inline Game parallel_corecurrence(Game a) {
  return Game(std::make_shared<detail::RecurrenceGame>(false, std::move(a)));
}
inline Game branching_recurrence(Game a) {
  return Game(std::make_shared<detail::BranchingGame>(true, std::move(a)));
}
inline Game branching_corecurrence(Game a) {
  return Game(std::make_shared<detail::BranchingGame>(false, std::move(a)));
}

// ---------------------------------------------------------------------------
// Finite-game text format:
//   finitegame
//   ()       => B
//   T a      => T
//   T a;B b  => B

inline FiniteGameSpec parse_finite_game(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  FiniteGameSpec spec;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto fail = [&](const std::string& what) {
      throw ParseError("line " + std::to_string(lineno) + ": " + what);
    };
    if (!header) {
      if (t != "finitegame") fail("expected header 'finitegame'");
      header = true;
      continue;
    }
    const auto arrow = t.find("=>");
    if (arrow == std::string::npos) fail("expected '<run> => T|B'");
    const std::string lhs = trim(std::string_view(t).substr(0, arrow));
    const std::string rhs = trim(std::string_view(t).substr(arrow + 2));
    Player p;
    if (rhs == "T") {
      p = Player::kTop;
    } else if (rhs == "B") {
      p = Player::kBot;
    } else {
      fail("winner must be T or B");
    }
    Run run;
    if (lhs != "()") {
      std::istringstream parts(lhs);
      std::string part;
      while (std::getline(parts, part, ';')) {
        try {
          run.push_back(parse_labmove(part));
        } catch (const ParseError& e) {
          fail(e.what());
        }
      }
    }
    if (!spec.labels.emplace(run, p).second) fail("duplicate run " + show_run(run));
  }
  if (!header) throw ParseError("missing 'finitegame' header");
  auto problems = validate_finite_game(spec);
  if (!problems.empty()) throw ParseError(problems.front());
  return spec;
}

inline std::string render_finite_game(const FiniteGameSpec& spec) {
  std::string out = "finitegame\n";
  for (const auto& [run, p] : spec.labels) {
    std::string lhs;
    for (std::size_t i = 0; i < run.size(); ++i) {
      if (i) lhs += ";";
      lhs += render_labmove(run[i]);
    }
    out += (run.empty() ? std::string("()") : lhs) + " => " + player_char(p) + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Interpretations.

using Interpretation = std::map<std::string, Game>;

inline Game interpret_formula(const Formula& f, const Interpretation& interp) {
  switch (f.kind()) {
    case Connective::kAtom:
    case Connective::kNegAtom: {
      auto it = interp.find(f.atom_name());
      if (it == interp.end()) throw SemanticError("unmapped atom " + f.atom_name());
      return f.kind() == Connective::kAtom ? it->second : negation(it->second);
    }
    case Connective::kAnd: return conjunction(interpret_formula(f.left(), interp), interpret_formula(f.right(), interp));
    case Connective::kOr: return disjunction(interpret_formula(f.left(), interp), interpret_formula(f.right(), interp));
    case Connective::kPst: return parallel_recurrence(interpret_formula(f.body(), interp));
    case Connective::kPcost: return parallel_corecurrence(interpret_formula(f.body(), interp));
    case Connective::kSt: return branching_recurrence(interpret_formula(f.body(), interp));
    case Connective::kCost: return branching_corecurrence(interpret_formula(f.body(), interp));
  }
  throw SemanticError("unknown connective");
}

namespace detail {

class CirquentGame final : public GameImpl {
 public:
  CirquentGame(Cirquent c, std::vector<Game> games) : c_(std::move(c)), games_(std::move(games)) {
    for (std::size_t a = 0; a < c_.size(); ++a) member_coords_.push_back(c_.overgroups_of(a));
  }

  bool legal(const Run& run) const override {
    std::vector<CellMove> moves;
    if (!parse_moves(run, moves)) return false;
    for (std::size_t a = 0; a < c_.size(); ++a) {
      const auto& coords = member_coords_[a];
      const auto candidates = candidate_values(moves, coords, a);
      bool ok = true;
      for_each_choice(candidates, [&](const std::vector<std::uint64_t>& choice) {
        if (ok && !games_[a].legal(cell_run(run, moves, a, coords, choice))) ok = false;
      });
      if (!ok) return false;
    }
    return true;
  }

  Player legal_winner(const Run& run) const override {
    std::vector<CellMove> moves;
    parse_moves(run, moves);
    std::map<std::pair<std::size_t, std::vector<std::uint64_t>>, bool> memo;
    for (const auto& under : c_.undergroups) {
      // Only the coordinates of overgroups that meet this undergroup matter.
      std::set<std::size_t> relevant;
      for (std::size_t a : under) relevant.insert(member_coords_[a].begin(), member_coords_[a].end());
      const std::vector<std::size_t> coords(relevant.begin(), relevant.end());
      const auto candidates = candidate_values(moves, coords, std::nullopt);
      bool won = true;
      for_each_choice(candidates, [&](const std::vector<std::uint64_t>& choice) {
        if (!won) return;
        bool some = false;
        for (std::size_t a : under) {
          std::vector<std::uint64_t> key;
          for (std::size_t j : member_coords_[a]) {
            key.push_back(choice[static_cast<std::size_t>(
                std::find(coords.begin(), coords.end(), j) - coords.begin())]);
          }
          auto [it, fresh] = memo.try_emplace({a, key}, false);
          if (fresh) {
            it->second = games_[a].winner(cell_run(run, moves, a, member_coords_[a], key)) == Player::kTop;
          }
          if (it->second) {
            some = true;
            break;
          }
        }
        won = some;
      });
      if (!won) return Player::kBot;
    }
    return Player::kTop;
  }

  std::string describe() const override { return "cirquent[" + render_cirquent(c_) + "]"; }

 private:
  bool parse_moves(const Run& run, std::vector<CellMove>& out) const {
    out.clear();
    for (const auto& m : run) {
      auto cm = parse_cell_move(m.move);
      if (!cm || cm->oformula < 1 || cm->oformula > c_.size()) return false;
      if (cm->coords.size() != c_.overgroups.size()) return false;
      const std::size_t a = cm->oformula - 1;
      for (std::size_t j = 0; j < cm->coords.size(); ++j) {
        if ((cm->coords[j] == 0) == (c_.overgroups[j].count(a) > 0)) return false;
      }
      out.push_back(std::move(*cm));
    }
    return true;
  }

  // Per coordinate: the nonzero values used there plus one fresh value.
  static std::vector<std::vector<std::uint64_t>> candidate_values(const std::vector<CellMove>& moves,
                                                                  const std::vector<std::size_t>& coords,
                                                                  std::optional<std::size_t> only) {
    std::vector<std::vector<std::uint64_t>> out;
    for (std::size_t j : coords) {
      std::set<std::uint64_t> used;
      for (const auto& m : moves) {
        if (only && m.oformula - 1 != *only) continue;
        if (m.coords[j] != 0) used.insert(m.coords[j]);
      }
      std::vector<std::uint64_t> vals(used.begin(), used.end());
      vals.push_back(used.empty() ? 1 : *used.rbegin() + 1);
      out.push_back(std::move(vals));
    }
    return out;
  }

  template <typename F>
  static void for_each_choice(const std::vector<std::vector<std::uint64_t>>& candidates, F&& f) {
    std::vector<std::size_t> idx(candidates.size(), 0);
    std::vector<std::uint64_t> choice(candidates.size());
    while (true) {
      for (std::size_t j = 0; j < candidates.size(); ++j) choice[j] = candidates[j][idx[j]];
      f(choice);
      std::size_t j = 0;
      while (j < candidates.size() && ++idx[j] == candidates[j].size()) idx[j++] = 0;
      if (j == candidates.size()) return;
    }
  }

  // Run of oformula a in the copy where the coordinates `coords` take the
  // values `choice`; coordinates outside a's overgroups are always 0.
  static Run cell_run(const Run& run, const std::vector<CellMove>& moves, std::size_t a,
                      const std::vector<std::size_t>& coords, const std::vector<std::uint64_t>& choice) {
    Run out;
    for (std::size_t i = 0; i < moves.size(); ++i) {
      if (moves[i].oformula - 1 != a) continue;
      bool keep = true;
      for (std::size_t t = 0; t < coords.size() && keep; ++t) keep = moves[i].coords[coords[t]] == choice[t];
      if (keep) out.push_back({run[i].player, moves[i].rest});
    }
    return out;
  }

  Cirquent c_;
  std::vector<Game> games_;
  std::vector<std::vector<std::size_t>> member_coords_;
};

}  // namespace detail

inline Game interpret_cirquent(const Cirquent& c, const Interpretation& interp) {
  auto problems = validate_cirquent(c);
  if (!problems.empty()) throw SemanticError("invalid cirquent: " + problems.front());
  std::vector<Game> games;
  for (const auto& f : c.oformulas) games.push_back(interpret_formula(f, interp));
  return Game(std::make_shared<detail::CirquentGame>(c, std::move(games)));
}

}  // namespace cl15
