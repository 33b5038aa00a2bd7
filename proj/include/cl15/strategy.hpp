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

// Easy-play machines, the machine-vs-environment simulator, the per-rule
// move translators and proof-to-strategy extraction.
//
// A machine moves at any time; its environment moves at most once, and only
// right after the machine grants permission. A wrapper machine runs an inner
// machine on an imaginary run and translates moves both ways.

#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cl15/cirquent.hpp"
#include "cl15/error.hpp"
#include "cl15/games.hpp"
#include "cl15/rules.hpp"
#include "cl15/runs.hpp"

namespace cl15 {

// ---------------------------------------------------------------------------
// Pairing: f(u1,u2) = (u1+u2-2)(u1+u2-1)/2 + u1, a bijection between pairs of
// positive integers and positive integers. The n-ary version folds to the
// right: f(u) = u, f(u1,...,un) = f(u1, f(u2,...,un)), and f() = 1.

inline std::uint64_t pair_index(std::uint64_t u1, std::uint64_t u2) {
  if (u1 == 0 || u2 == 0) throw std::invalid_argument("pairing is defined on positive integers");
  const std::uint64_t d = u1 + u2 - 2;
  if (d > 3'000'000'000ULL) throw std::overflow_error("pairing overflow");
  return d * (d + 1) / 2 + u1;
}

inline std::pair<std::uint64_t, std::uint64_t> unpair_index(std::uint64_t u) {
  if (u == 0) throw std::invalid_argument("pairing is defined on positive integers");
  // Largest d with d(d+1)/2 < u.
  std::uint64_t d = 0;
  while ((d + 1) * (d + 2) / 2 < u) ++d;
  const std::uint64_t u1 = u - d * (d + 1) / 2;
  return {u1, d + 2 - u1};
}

inline std::uint64_t pair_fold(const std::vector<std::uint64_t>& us) {
  if (us.empty()) return 1;
  std::uint64_t acc = us.back();
  for (std::size_t i = us.size() - 1; i-- > 0;) acc = pair_index(us[i], acc);
  return acc;
}

// Inverse of pair_fold for n components; nullopt when u is not a value of
// the n-ary fold (only possible for n = 0).
inline std::optional<std::vector<std::uint64_t>> unpair_fold(std::uint64_t u, std::size_t n) {
  if (n == 0) {
    if (u != 1) return std::nullopt;
    return std::vector<std::uint64_t>{};
  }
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    auto [head, tail] = unpair_index(u);
    out.push_back(head);
    u = tail;
  }
  out.push_back(u);
  return out;
}

// ---------------------------------------------------------------------------
// Machines and environments.

struct MakeMove {
  std::string move;
  friend bool operator==(const MakeMove&, const MakeMove&) = default;
};
struct Grant {
  friend bool operator==(const Grant&, const Grant&) = default;
};
struct Idle {
  friend bool operator==(const Idle&, const Idle&) = default;
};
using Action = std::variant<MakeMove, Grant, Idle>;

// Stateful per play; `visible` is the whole run so far, including the
// machine's own moves.
class Machine {
 public:
  virtual ~Machine() = default;
  virtual Action next(const Run& visible, std::size_t step) = 0;
};

class Strategy {
 public:
  Strategy(std::string description, std::function<std::unique_ptr<Machine>()> factory)
      : description_(std::move(description)), factory_(std::move(factory)) {}

  std::unique_ptr<Machine> instantiate() const { return factory_(); }
  const std::string& describe() const { return description_; }

 private:
  std::string description_;
  std::function<std::unique_ptr<Machine>()> factory_;
};

class Environment {
 public:
  virtual ~Environment() = default;
  // Called once per grant; returns the move to make, if any.
  virtual std::optional<std::string> on_grant(const Run& visible) = 0;
  // True once the environment will never move again.
  virtual bool quiescent() const { return false; }
  // True when the environment asks to stop the play.
  virtual bool halted() const { return false; }
  virtual std::string name() const = 0;
};

struct SimulationResult {
  Run run;
  Player winner = Player::kTop;
  std::size_t grants = 0;
  std::size_t steps = 0;
  std::optional<Offense> offense;
  std::vector<std::string> trace;
  std::vector<std::string> diagnostics;

  std::string render_trace() const {
    std::string out;
    for (const auto& line : trace) out += line + "\n";
    out += std::string("winner: ") + player_char(winner) + " grants:" + std::to_string(grants) + "\n";
    return out;
  }
};

// observer, if set, sees the run after every appended labmove.
inline SimulationResult simulate(Machine& machine, Environment& env, const Game& game, std::int64_t budget,
                                 const std::function<void(const Run&)>& observer = {}) {
  if (budget <= 0) throw std::invalid_argument("simulation budget must be positive");
  SimulationResult r;
  for (std::int64_t k = 1; k <= budget; ++k) {
    if (env.halted()) break;
    r.steps = static_cast<std::size_t>(k);
    const std::string tag = std::to_string(k) + " ";
    const Action a = machine.next(r.run, r.steps);
    if (auto* m = std::get_if<MakeMove>(&a)) {
      r.run.push_back(top(m->move));
      r.trace.push_back(tag + "M:move " + m->move);
      if (observer) observer(r.run);
    } else if (std::holds_alternative<Grant>(a)) {
      ++r.grants;
      r.trace.push_back(tag + "M:grant");
      if (auto mv = env.on_grant(r.run)) {
        r.run.push_back(bot(*mv));
        r.trace.push_back(tag + "E:" + *mv);
        if (observer) observer(r.run);
      }
    } else {
      r.trace.push_back(tag + "M:idle");
      if (env.quiescent()) break;
    }
  }
  r.offense = game.first_offense(r.run);
  if (r.offense) {
    r.diagnostics.push_back(std::string(r.offense->offender == Player::kTop ? "machine" : "environment") +
                            " offender at labmove " + std::to_string(r.offense->index + 1) + " (" +
                            r.run[r.offense->index].move + ")");
  }
  r.winner = game.winner(r.run);
  return r;
}

// ---------------------------------------------------------------------------
// Simple machines.

class GranterMachine final : public Machine {
 public:
  Action next(const Run&, std::size_t) override { return Grant{}; }
};

inline Strategy granter_strategy() {
  return Strategy("granter", [] { return std::make_unique<GranterMachine>(); });
}

// Plays a fixed list of actions, then idles.
class ScriptedMachine final : public Machine {
 public:
  explicit ScriptedMachine(std::vector<Action> script) : script_(std::move(script)) {}
  Action next(const Run&, std::size_t) override {
    if (pos_ < script_.size()) return script_[pos_++];
    return Idle{};
  }

 private:
  std::vector<Action> script_;
  std::size_t pos_ = 0;
};

class AxiomMachine final : public Machine {
 public:
  explicit AxiomMachine(std::size_t pairs) : pairs_(pairs) {}

  Action next(const Run& visible, std::size_t) override {
    for (; seen_ < visible.size(); ++seen_) {
      if (visible[seen_].player != Player::kBot) continue;
      auto cm = parse_cell_move(visible[seen_].move);
      if (!cm || cm->oformula < 1 || cm->oformula > 2 * pairs_) continue;
      cm->oformula = cm->oformula % 2 == 1 ? cm->oformula + 1 : cm->oformula - 1;
      pending_.push_back(cm->render());
    }
    if (pending_.empty()) return Grant{};
    std::string m = std::move(pending_.front());
    pending_.pop_front();
    return MakeMove{std::move(m)};
  }

 private:
  std::size_t pairs_;
  std::size_t seen_ = 0;
  std::deque<std::string> pending_;
};

// Copycat for an axiom with n pairs: mirrors every environment move in
// oformula a into its partner b = a+1 (a odd) or a-1 (a even).
inline Strategy axiom_strategy(std::size_t n) {
  if (n == 0) throw std::invalid_argument("axiom strategy needs n >= 1");
  return Strategy("axiom(" + std::to_string(n) + ")", [n] { return std::make_unique<AxiomMachine>(n); });
}

// ---------------------------------------------------------------------------
// Translators.

class Translator {
 public:
  Translator(std::string name, std::function<std::optional<std::string>(const std::string&)> to_inner,
             std::function<std::optional<std::string>(const std::string&)> to_outer)
      : name_(std::move(name)), to_inner_(std::move(to_inner)), to_outer_(std::move(to_outer)) {}

  // Outer (real) move -> inner (imaginary) move; nullopt drops the move.
  std::optional<std::string> to_inner(const std::string& outer) const { return to_inner_(outer); }
  // Inner move -> outer move; nullopt keeps the move in the imaginary run only.
  std::optional<std::string> to_outer(const std::string& inner) const { return to_outer_(inner); }
  const std::string& name() const { return name_; }

 private:
  std::string name_;
  std::function<std::optional<std::string>(const std::string&)> to_inner_;
  std::function<std::optional<std::string>(const std::string&)> to_outer_;
};

class SimulatingMachine final : public Machine {
 public:
  SimulatingMachine(std::unique_ptr<Machine> inner, std::shared_ptr<const Translator> tr)
      : inner_(std::move(inner)), tr_(std::move(tr)) {}

  Action next(const Run& visible, std::size_t) override {
    for (; synced_ < visible.size(); ++synced_) {
      if (visible[synced_].player != Player::kBot) continue;
      if (auto m = tr_->to_inner(visible[synced_].move)) imaginary_.push_back(bot(*m));
    }
    for (int i = 0; i < kAbsorbLimit; ++i) {
      Action a = inner_->next(imaginary_, ++inner_steps_);
      auto* m = std::get_if<MakeMove>(&a);
      if (!m) return a;
      imaginary_.push_back(top(m->move));
      if (auto out = tr_->to_outer(m->move)) return MakeMove{*out};
    }
    return Idle{};
  }

  const Run& imaginary() const { return imaginary_; }
  Machine& inner() { return *inner_; }

 private:
  static constexpr int kAbsorbLimit = 64;
  std::unique_ptr<Machine> inner_;
  std::shared_ptr<const Translator> tr_;
  Run imaginary_;
  std::size_t synced_ = 0;
  std::size_t inner_steps_ = 0;
};

inline Strategy wrap_strategy(const Strategy& inner, std::shared_ptr<const Translator> tr) {
  const std::string desc = tr->name() + "[" + inner.describe() + "]";
  return Strategy(desc, [inner, tr] { return std::make_unique<SimulatingMachine>(inner.instantiate(), tr); });
}

namespace detail {

using CellMap = std::function<bool(CellMove&)>;

inline std::function<std::optional<std::string>(const std::string&)> on_cells(CellMap f) {
  return [f = std::move(f)](const std::string& move) -> std::optional<std::string> {
    auto cm = parse_cell_move(move);
    if (!cm || !f(*cm)) return std::nullopt;
    return cm->render();
  };
}

// Splits "u.rest" with u a positive decimal.
inline std::optional<std::pair<std::uint64_t, std::string>> split_copy(const std::string& rest) {
  auto parts = split_head(rest);
  if (!parts) return std::nullopt;
  auto u = parse_positive(parts->first);
  if (!u) return std::nullopt;
  return std::make_pair(*u, std::string(parts->second));
}

inline Translator identity_translator(std::string name) {
  auto id = [](const std::string& m) -> std::optional<std::string> { return m; };
  return Translator(std::move(name), id, id);
}

inline Translator oformula_exchange_translator(std::size_t pos) {
  auto swap = [pos](CellMove& m) {
    if (m.oformula == pos) {
      m.oformula = pos + 1;
    } else if (m.oformula == pos + 1) {
      m.oformula = pos;
    }
    return true;
  };
  return Translator("oformula-exchange", on_cells(swap), on_cells(swap));
}

inline Translator overgroup_exchange_translator(std::size_t pos, std::size_t n) {
  auto swap = [pos, n](CellMove& m) {
    if (m.coords.size() != n) return false;
    std::swap(m.coords[pos - 1], m.coords[pos]);
    return true;
  };
  return Translator("overgroup-exchange", on_cells(swap), on_cells(swap));
}

// Premise coordinate j (0-based) is split into coordinates j, j+1.
inline Translator overgroup_duplication_translator(std::size_t j, std::size_t n_premise) {
  auto to_inner = [j, n_premise](CellMove& m) {
    if (m.coords.size() != n_premise + 1) return false;
    const std::uint64_t u1 = m.coords[j], u2 = m.coords[j + 1];
    if ((u1 == 0) != (u2 == 0)) return false;
    m.coords[j] = u1 == 0 ? 0 : pair_index(u1, u2);
    m.coords.erase(m.coords.begin() + static_cast<std::ptrdiff_t>(j + 1));
    return true;
  };
  auto to_outer = [j, n_premise](CellMove& m) {
    if (m.coords.size() != n_premise) return false;
    std::uint64_t u1 = 0, u2 = 0;
    if (m.coords[j] != 0) std::tie(u1, u2) = unpair_index(m.coords[j]);
    m.coords[j] = u1;
    m.coords.insert(m.coords.begin() + static_cast<std::ptrdiff_t>(j + 1), u2);
    return true;
  };
  return Translator("overgroup-duplication", on_cells(to_inner), on_cells(to_outer));
}

// Premise coordinates j, j+1 (0-based) merge into conclusion coordinate j.
inline Translator merging_translator(std::size_t j, const Cirquent& premise) {
  const std::size_t n = premise.overgroups.size();
  auto member = [premise, j](std::uint64_t a, std::size_t k) {
    return premise.overgroups[j + k].count(static_cast<std::size_t>(a - 1)) > 0;
  };
  auto to_inner = [=](CellMove& m) {
    if (m.coords.size() != n - 1 || m.oformula < 1 || m.oformula > premise.size()) return false;
    const bool in1 = member(m.oformula, 0), in2 = member(m.oformula, 1);
    const std::uint64_t v = m.coords[j];
    std::uint64_t v1 = 0, v2 = 0;
    if (in1 && in2) {
      if (v == 0) return false;
      std::tie(v1, v2) = unpair_index(v);
    } else if (in1) {
      v1 = v;
    } else if (in2) {
      v2 = v;
    } else if (v != 0) {
      return false;
    }
    m.coords[j] = v1;
    m.coords.insert(m.coords.begin() + static_cast<std::ptrdiff_t>(j + 1), v2);
    return true;
  };
  auto to_outer = [=](CellMove& m) {
    if (m.coords.size() != n || m.oformula < 1 || m.oformula > premise.size()) return false;
    const bool in1 = member(m.oformula, 0), in2 = member(m.oformula, 1);
    const std::uint64_t v1 = m.coords[j], v2 = m.coords[j + 1];
    if ((v1 != 0) != in1 || (v2 != 0) != in2) return false;
    std::uint64_t v = 0;
    if (in1 && in2) {
      v = pair_index(v1, v2);
    } else {
      v = v1 + v2;
    }
    m.coords[j] = v;
    m.coords.erase(m.coords.begin() + static_cast<std::ptrdiff_t>(j + 1));
    return true;
  };
  return Translator("merging", on_cells(to_inner), on_cells(to_outer));
}

// Oformula d (1-based, conclusion) was deleted together with the conclusion
// overgroups in `gone` (0-based), which contained nothing but d.
inline Translator weakening_translator(std::size_t d, std::set<std::size_t> gone, std::size_t n_conclusion) {
  auto to_inner = [=](CellMove& m) {
    if (m.oformula == d || m.coords.size() != n_conclusion) return false;
    if (m.oformula > d) --m.oformula;
    std::vector<std::uint64_t> kept;
    for (std::size_t j = 0; j < m.coords.size(); ++j) {
      if (!gone.count(j)) {
        kept.push_back(m.coords[j]);
      } else if (m.coords[j] != 0) {
        return false;
      }
    }
    m.coords = std::move(kept);
    return true;
  };
  auto to_outer = [=](CellMove& m) {
    if (m.coords.size() + gone.size() != n_conclusion) return false;
    if (m.oformula >= d) ++m.oformula;
    std::vector<std::uint64_t> full;
    std::size_t src = 0;
    for (std::size_t j = 0; j < n_conclusion; ++j) full.push_back(gone.count(j) ? 0 : m.coords[src++]);
    m.coords = std::move(full);
    return true;
  };
  return Translator("weakening", on_cells(to_inner), on_cells(to_outer));
}

inline Translator contraction_translator(std::size_t a) {
  auto to_inner = [a](CellMove& m) {
    if (m.oformula > a) {
      ++m.oformula;
      return true;
    }
    if (m.oformula < a) return true;
    auto cp = split_copy(m.rest);
    if (!cp) return false;
    const std::uint64_t u = cp->first;
    if (u % 2 == 1) {
      m.rest = std::to_string((u + 1) / 2) + "." + cp->second;
    } else {
      m.oformula = a + 1;
      m.rest = std::to_string(u / 2) + "." + cp->second;
    }
    return true;
  };
  auto to_outer = [a](CellMove& m) {
    if (m.oformula < a) return true;
    if (m.oformula > a + 1) {
      --m.oformula;
      return true;
    }
    auto cp = split_copy(m.rest);
    if (!cp) return false;
    const std::uint64_t u = m.oformula == a ? 2 * cp->first - 1 : 2 * cp->first;
    m.oformula = a;
    m.rest = std::to_string(u) + "." + cp->second;
    return true;
  };
  return Translator("contraction", on_cells(to_inner), on_cells(to_outer));
}

inline Translator split_translator(std::string name, std::size_t a) {
  auto to_inner = [a](CellMove& m) {
    if (m.oformula > a) {
      ++m.oformula;
      return true;
    }
    if (m.oformula < a) return true;
    auto parts = split_head(m.rest);
    if (!parts || (parts->first != "1" && parts->first != "2")) return false;
    if (parts->first == "2") m.oformula = a + 1;
    m.rest = std::string(parts->second);
    return true;
  };
  auto to_outer = [a](CellMove& m) {
    if (m.oformula < a) return true;
    if (m.oformula > a + 1) {
      --m.oformula;
      return true;
    }
    m.rest = (m.oformula == a ? "1." : "2.") + m.rest;
    m.oformula = a;
    return true;
  };
  return Translator(std::move(name), on_cells(to_inner), on_cells(to_outer));
}

// The premise has one extra overgroup, the last, containing only a.
inline Translator pst_translator(std::size_t a, std::size_t n_conclusion) {
  auto to_inner = [=](CellMove& m) {
    if (m.coords.size() != n_conclusion) return false;
    if (m.oformula != a) {
      m.coords.push_back(0);
      return true;
    }
    auto cp = split_copy(m.rest);
    if (!cp) return false;
    m.coords.push_back(cp->first);
    m.rest = cp->second;
    return true;
  };
  auto to_outer = [=](CellMove& m) {
    if (m.coords.size() != n_conclusion + 1) return false;
    const std::uint64_t u = m.coords.back();
    m.coords.pop_back();
    if (m.oformula != a) return u == 0;
    if (u == 0) return false;
    m.rest = std::to_string(u) + "." + m.rest;
    return true;
  };
  return Translator("pst", on_cells(to_inner), on_cells(to_outer));
}

// Oformula a was added to the overgroups `added` (0-based) of the premise.
inline Translator pcost_translator(std::size_t a, std::set<std::size_t> added, std::size_t n) {
  auto to_inner = [=](CellMove& m) {
    if (m.coords.size() != n) return false;
    if (m.oformula != a) return true;
    for (std::size_t j : added) {
      if (m.coords[j] != 0) return false;
    }
    auto cp = split_copy(m.rest);
    if (!cp) return false;
    auto us = unpair_fold(cp->first, added.size());
    if (!us) return false;
    std::size_t t = 0;
    for (std::size_t j : added) m.coords[j] = (*us)[t++];
    m.rest = cp->second;
    return true;
  };
  auto to_outer = [=](CellMove& m) {
    if (m.coords.size() != n) return false;
    if (m.oformula != a) return true;
    std::vector<std::uint64_t> us;
    for (std::size_t j : added) {
      if (m.coords[j] == 0) return false;
      us.push_back(m.coords[j]);
      m.coords[j] = 0;
    }
    m.rest = std::to_string(pair_fold(us)) + "." + m.rest;
    return true;
  };
  return Translator("pcost", on_cells(to_inner), on_cells(to_outer));
}

}  // namespace detail

// Translator between the real play of the conclusion (outer) and the
// imaginary play of the premise (inner) for a checked rule instance.
inline std::shared_ptr<const Translator> make_translator(const RuleInstance& r, const Cirquent& premise,
                                                         const Cirquent& conclusion) {
  using namespace detail;
  if (auto* x = std::get_if<rule::OformulaExchange>(&r)) {
    return std::make_shared<Translator>(oformula_exchange_translator(x->position));
  }
  if (auto* x = std::get_if<rule::OvergroupExchange>(&r)) {
    return std::make_shared<Translator>(overgroup_exchange_translator(x->position, conclusion.overgroups.size()));
  }
  if (auto* x = std::get_if<rule::OvergroupDuplication>(&r)) {
    return std::make_shared<Translator>(overgroup_duplication_translator(x->position - 1, premise.overgroups.size()));
  }
  if (auto* x = std::get_if<rule::Merging>(&r)) {
    return std::make_shared<Translator>(merging_translator(x->position - 1, premise));
  }
  if (auto* x = std::get_if<rule::Weakening>(&r)) {
    if (premise.size() == conclusion.size()) return std::make_shared<Translator>(identity_translator("weakening"));
    std::set<std::size_t> gone;
    for (std::size_t j = 0; j < conclusion.overgroups.size(); ++j) {
      if (conclusion.overgroups[j] == Group{x->oformula - 1}) gone.insert(j);
    }
    return std::make_shared<Translator>(weakening_translator(x->oformula, gone, conclusion.overgroups.size()));
  }
  if (auto* x = std::get_if<rule::Contraction>(&r)) {
    return std::make_shared<Translator>(contraction_translator(x->oformula));
  }
  if (auto* x = std::get_if<rule::OrIntro>(&r)) {
    return std::make_shared<Translator>(split_translator("or", x->oformula));
  }
  if (auto* x = std::get_if<rule::AndIntro>(&r)) {
    return std::make_shared<Translator>(split_translator("and", x->oformula));
  }
  if (auto* x = std::get_if<rule::PstIntro>(&r)) {
    return std::make_shared<Translator>(pst_translator(x->oformula, conclusion.overgroups.size()));
  }
  if (auto* x = std::get_if<rule::PcostIntro>(&r)) {
    std::set<std::size_t> added;
    for (std::size_t j : x->added_overgroups) added.insert(j - 1);
    return std::make_shared<Translator>(pcost_translator(x->oformula, added, conclusion.overgroups.size()));
  }
  if (std::holds_alternative<rule::UndergroupExchange>(r) || std::holds_alternative<rule::UndergroupDuplication>(r)) {
    return std::make_shared<Translator>(identity_translator(rule_name(r)));
  }
  throw RuleError("no translator for rule " + rule_name(r));
}

inline Strategy transform_strategy(const RuleInstance& r, const Cirquent& premise, const Cirquent& conclusion,
                                   const Strategy& inner) {
  if (auto v = check_step(premise, conclusion, r)) throw RuleError("rule/cirquent mismatch: " + v->what);
  return wrap_strategy(inner, make_translator(r, premise, conclusion));
}

// From a strategy for the single-oformula cirquent of F to one for !F:
// "u.alpha" <-> "1;u.alpha".
inline std::shared_ptr<const Translator> declubsuit_translator() {
  auto to_inner = [](const std::string& m) -> std::optional<std::string> {
    auto cp = detail::split_copy(m);
    if (!cp) return std::nullopt;
    return "1;" + m;
  };
  auto to_outer = [](const std::string& m) -> std::optional<std::string> {
    auto cm = parse_cell_move(m);
    if (!cm || cm->oformula != 1 || cm->coords.size() != 1 || cm->coords[0] == 0) return std::nullopt;
    return std::to_string(cm->coords[0]) + "." + cm->rest;
  };
  return std::make_shared<Translator>("declubsuit", to_inner, to_outer);
}

// From a strategy for !F to one for F, playing the real game as copy 1.
inline std::shared_ptr<const Translator> depst_translator() {
  auto to_inner = [](const std::string& m) -> std::optional<std::string> { return "1." + m; };
  auto to_outer = [](const std::string& m) -> std::optional<std::string> {
    if (m.rfind("1.", 0) != 0) return std::nullopt;
    return m.substr(2);
  };
  return std::make_shared<Translator>("depst", to_inner, to_outer);
}

inline Strategy declubsuit(const Strategy& s) { return wrap_strategy(s, declubsuit_translator()); }
inline Strategy depst(const Strategy& s) { return wrap_strategy(s, depst_translator()); }

// Folds the axiom strategy through the translators along the proof. With
// formula_level set, the proof must end in a single-oformula cirquent of F
// and the result plays F itself.
inline Strategy extract_solution(const Proof& proof, bool formula_level = false) {
  if (auto failure = verify_proof(proof)) {
    throw RuleError("proof does not verify: step " + std::to_string(failure->step) + ": " + failure->what);
  }
  Strategy s = axiom_strategy(proof.steps.front().cirquent.size() / 2);
  for (std::size_t k = 1; k < proof.steps.size(); ++k) {
    s = transform_strategy(proof.steps[k].rule, proof.steps[k - 1].cirquent, proof.steps[k].cirquent, s);
  }
  if (formula_level) {
    if (!proved_formula(proof)) throw RuleError("proof does not end in a single-oformula cirquent");
    s = depst(declubsuit(s));
  }
  return s;
}

}  // namespace cl15
