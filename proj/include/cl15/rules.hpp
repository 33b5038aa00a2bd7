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

// The ten inference rules of CL15 as exact premise/conclusion relations,
// plus whole-proof verification and the proof file format.
//
// All rule parameters are 1-based. Exchange, Duplication and Merging are
// described premise -> conclusion: the position names the left member of
// the adjacent pair in the premise. The other rules are described bottom-up:
// their parameters index into the conclusion.

#pragma once

#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "cl15/cirquent.hpp"
#include "cl15/error.hpp"
#include "cl15/formula.hpp"

namespace cl15 {

namespace rule {

struct Axiom {
  std::vector<Formula> formulas;  // empty: read off the cirquent
};
struct OformulaExchange {
  std::size_t position;
};
struct UndergroupExchange {
  std::size_t position;
};
struct OvergroupExchange {
  std::size_t position;
};
struct UndergroupDuplication {
  std::size_t position;
};
struct OvergroupDuplication {
  std::size_t position;
};
struct Merging {
  std::size_t position;
};
struct Weakening {
  std::size_t undergroup;
  std::size_t oformula;
};
struct Contraction {
  std::size_t oformula;
};
struct OrIntro {
  std::size_t oformula;
};
struct AndIntro {
  std::size_t oformula;
};
struct PstIntro {
  std::size_t oformula;
};
struct PcostIntro {
  std::size_t oformula;
  std::set<std::size_t> added_overgroups;
};

}  // namespace rule

using RuleInstance =
    std::variant<rule::Axiom, rule::OformulaExchange, rule::UndergroupExchange, rule::OvergroupExchange,
                 rule::UndergroupDuplication, rule::OvergroupDuplication, rule::Merging, rule::Weakening,
                 rule::Contraction, rule::OrIntro, rule::AndIntro, rule::PstIntro, rule::PcostIntro>;

inline std::string rule_name(const RuleInstance& r) {
  static const char* const kNames[] = {"axiom",
                                       "oformula-exchange",
                                       "undergroup-exchange",
                                       "overgroup-exchange",
                                       "undergroup-duplication",
                                       "overgroup-duplication",
                                       "merging",
                                       "weakening",
                                       "contraction",
                                       "or",
                                       "and",
                                       "pst",
                                       "pcost"};
  return kNames[r.index()];
}

inline bool is_forward_rule(const RuleInstance& r) {
  return std::holds_alternative<rule::OformulaExchange>(r) || std::holds_alternative<rule::UndergroupExchange>(r) ||
         std::holds_alternative<rule::OvergroupExchange>(r) ||
         std::holds_alternative<rule::UndergroupDuplication>(r) ||
         std::holds_alternative<rule::OvergroupDuplication>(r) || std::holds_alternative<rule::Merging>(r);
}

struct Violation {
  std::string what;
};

// ---------------------------------------------------------------------------
// Axiom.

inline Cirquent axiom_cirquent(const std::vector<Formula>& formulas) {
  if (formulas.empty()) throw RuleError("axiom needs at least one formula");
  Cirquent c;
  for (std::size_t i = 0; i < formulas.size(); ++i) {
    c.oformulas.push_back(dual(formulas[i]));
    c.oformulas.push_back(formulas[i]);
    c.undergroups.push_back({2 * i, 2 * i + 1});
    c.overgroups.push_back({2 * i, 2 * i + 1});
  }
  return c;
}

// Formulas F1..Fn read from the even positions of c.
inline std::vector<Formula> axiom_formulas_of(const Cirquent& c) {
  std::vector<Formula> out;
  for (std::size_t a = 1; a < c.size(); a += 2) out.push_back(c.oformulas[a]);
  return out;
}

namespace detail {

inline std::string show_group(const Group& g) {
  std::string out = "{";
  bool first = true;
  for (std::size_t a : g) {
    if (!first) out += ",";
    out += std::to_string(a + 1);
    first = false;
  }
  return out + "}";
}

// First structural difference between the cirquent a rule produces and the
// one the proof states.
inline std::optional<Violation> compare_cirquents(const Cirquent& expected, const Cirquent& found) {
  auto fail = [](std::string s) { return std::optional<Violation>(Violation{std::move(s)}); };
  if (expected.size() != found.size()) {
    return fail("expected " + std::to_string(expected.size()) + " oformulas, found " +
                std::to_string(found.size()));
  }
  for (std::size_t a = 0; a < expected.size(); ++a) {
    if (expected.oformulas[a] != found.oformulas[a]) {
      return fail("oformula " + std::to_string(a + 1) + ": expected " + render_formula(expected.oformulas[a]) +
                  ", found " + render_formula(found.oformulas[a]));
    }
  }
  auto groups = [&](const std::vector<Group>& e, const std::vector<Group>& f,
                    const char* name) -> std::optional<Violation> {
    if (e.size() != f.size()) {
      return fail(std::string("expected ") + std::to_string(e.size()) + " " + name + "s, found " +
                  std::to_string(f.size()));
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != f[i]) {
        return fail(std::string(name) + " " + std::to_string(i + 1) + ": expected " + show_group(e[i]) +
                    ", found " + show_group(f[i]));
      }
    }
    return std::nullopt;
  };
  if (auto v = groups(expected.undergroups, found.undergroups, "undergroup")) return v;
  return groups(expected.overgroups, found.overgroups, "overgroup");
}

// Maps every index through f, dropping those mapped to nullopt.
template <typename F>
Group remap(const Group& g, F&& f) {
  Group out;
  for (std::size_t a : g) {
    if (auto b = f(a)) out.insert(*b);
  }
  return out;
}

inline void check_position(std::size_t pos, std::size_t count, const char* what) {
  if (pos < 1 || pos + 1 > count) {
    throw RuleError(std::string(what) + " position " + std::to_string(pos) + " has no right neighbour among " +
                    std::to_string(count));
  }
}

inline void check_index(std::size_t idx, std::size_t count, const char* what) {
  if (idx < 1 || idx > count) {
    throw RuleError(std::string(what) + " " + std::to_string(idx) + " out of range (have " +
                    std::to_string(count) + ")");
  }
}

inline const Formula& expect_kind(const Cirquent& c, std::size_t a, Connective k, const char* shape) {
  check_index(a, c.size(), "oformula");
  const Formula& f = c.oformulas[a - 1];
  if (f.kind() != k) {
    throw RuleError("oformula " + std::to_string(a) + " (" + render_formula(f) + ") is not of the form " + shape);
  }
  return f;
}

// Replaces oformula a (0-based) by two adjacent oformulas first, second;
// every group containing a contains both.
inline Cirquent split_oformula(const Cirquent& c, std::size_t a, Formula first, Formula second) {
  Cirquent out;
  for (std::size_t b = 0; b < c.size(); ++b) {
    if (b == a) {
      out.oformulas.push_back(first);
      out.oformulas.push_back(second);
    } else {
      out.oformulas.push_back(c.oformulas[b]);
    }
  }
  auto shift = [&](const Group& g) {
    Group r;
    for (std::size_t b : g) {
      if (b < a) {
        r.insert(b);
      } else if (b == a) {
        r.insert(a);
        r.insert(a + 1);
      } else {
        r.insert(b + 1);
      }
    }
    return r;
  };
  for (const auto& g : c.undergroups) out.undergroups.push_back(shift(g));
  for (const auto& g : c.overgroups) out.overgroups.push_back(shift(g));
  return out;
}

}  // namespace detail

inline bool check_axiom(const Cirquent& c, const std::vector<Formula>& formulas, std::string* why = nullptr) {
  std::vector<Formula> fs = formulas;
  if (fs.empty()) {
    if (c.size() == 0 || c.size() % 2 != 0) {
      if (why) *why = "axiom needs an even, positive number of oformulas";
      return false;
    }
    fs = axiom_formulas_of(c);
  }
  auto v = detail::compare_cirquents(axiom_cirquent(fs), c);
  if (v && why) *why = "not an axiom: " + v->what;
  return !v;
}

// ---------------------------------------------------------------------------
// Forward rules.

inline Cirquent apply_forward(const Cirquent& premise, const RuleInstance& r) {
  Cirquent c = premise;
  if (auto* x = std::get_if<rule::OformulaExchange>(&r)) {
    detail::check_position(x->position, c.size(), "oformula");
    const std::size_t i = x->position - 1;
    std::swap(c.oformulas[i], c.oformulas[i + 1]);
    auto swap_idx = [i](std::size_t a) -> std::optional<std::size_t> {
      return a == i ? i + 1 : a == i + 1 ? i : a;
    };
    for (auto& g : c.undergroups) g = detail::remap(g, swap_idx);
    for (auto& g : c.overgroups) g = detail::remap(g, swap_idx);
  } else if (auto* x = std::get_if<rule::UndergroupExchange>(&r)) {
    detail::check_position(x->position, c.undergroups.size(), "undergroup");
    std::swap(c.undergroups[x->position - 1], c.undergroups[x->position]);
  } else if (auto* x = std::get_if<rule::OvergroupExchange>(&r)) {
    detail::check_position(x->position, c.overgroups.size(), "overgroup");
    std::swap(c.overgroups[x->position - 1], c.overgroups[x->position]);
  } else if (auto* x = std::get_if<rule::UndergroupDuplication>(&r)) {
    detail::check_index(x->position, c.undergroups.size(), "undergroup");
    c.undergroups.insert(c.undergroups.begin() + static_cast<std::ptrdiff_t>(x->position),
                         c.undergroups[x->position - 1]);
  } else if (auto* x = std::get_if<rule::OvergroupDuplication>(&r)) {
    detail::check_index(x->position, c.overgroups.size(), "overgroup");
    c.overgroups.insert(c.overgroups.begin() + static_cast<std::ptrdiff_t>(x->position),
                        c.overgroups[x->position - 1]);
  } else if (auto* x = std::get_if<rule::Merging>(&r)) {
    detail::check_position(x->position, c.overgroups.size(), "overgroup");
    const std::size_t i = x->position - 1;
    c.overgroups[i].insert(c.overgroups[i + 1].begin(), c.overgroups[i + 1].end());
    c.overgroups.erase(c.overgroups.begin() + static_cast<std::ptrdiff_t>(i + 1));
  } else {
    throw RuleError("rule " + rule_name(r) + " is not applied premise-to-conclusion");
  }
  return c;
}

// ---------------------------------------------------------------------------
// Bottom-up rules.

inline Cirquent construct_premise(const Cirquent& conclusion, const RuleInstance& r) {
  const Cirquent& c = conclusion;
  if (auto* x = std::get_if<rule::Weakening>(&r)) {
    detail::check_index(x->undergroup, c.undergroups.size(), "undergroup");
    detail::check_index(x->oformula, c.size(), "oformula");
    const std::size_t u = x->undergroup - 1, a = x->oformula - 1;
    if (!c.undergroups[u].count(a)) {
      throw RuleError("undergroup " + std::to_string(u + 1) + " does not contain oformula " + std::to_string(a + 1));
    }
    if (c.undergroups[u].size() < 2) {
      throw RuleError("undergroup " + std::to_string(u + 1) + " has fewer than 2 elements");
    }
    Cirquent p = c;
    p.undergroups[u].erase(a);
    bool orphan = true;
    for (const auto& g : p.undergroups) orphan = orphan && !g.count(a);
    if (!orphan) return p;
    p.oformulas.erase(p.oformulas.begin() + static_cast<std::ptrdiff_t>(a));
    auto drop = [a](std::size_t b) -> std::optional<std::size_t> {
      if (b == a) return std::nullopt;
      return b < a ? b : b - 1;
    };
    for (auto& g : p.undergroups) g = detail::remap(g, drop);
    std::vector<Group> overs;
    for (const auto& g : p.overgroups) {
      Group h = detail::remap(g, drop);
      if (!h.empty()) overs.push_back(std::move(h));
    }
    p.overgroups = std::move(overs);
    return p;
  }
  if (auto* x = std::get_if<rule::Contraction>(&r)) {
    const Formula& f = detail::expect_kind(c, x->oformula, Connective::kPcost, "?F");
    return detail::split_oformula(c, x->oformula - 1, f, f);
  }
  if (auto* x = std::get_if<rule::OrIntro>(&r)) {
    const Formula& f = detail::expect_kind(c, x->oformula, Connective::kOr, "E \\/ F");
    return detail::split_oformula(c, x->oformula - 1, f.left(), f.right());
  }
  if (auto* x = std::get_if<rule::AndIntro>(&r)) {
    const Formula& f = detail::expect_kind(c, x->oformula, Connective::kAnd, "E /\\ F");
    const std::size_t a = x->oformula - 1;
    Cirquent p = detail::split_oformula(c, a, f.left(), f.right());
    std::vector<Group> unders;
    for (const auto& g : p.undergroups) {
      if (!g.count(a)) {
        unders.push_back(g);
        continue;
      }
      Group ge = g, gf = g;
      ge.erase(a + 1);
      gf.erase(a);
      unders.push_back(std::move(ge));
      unders.push_back(std::move(gf));
    }
    p.undergroups = std::move(unders);
    return p;
  }
  if (auto* x = std::get_if<rule::PstIntro>(&r)) {
    const Formula& f = detail::expect_kind(c, x->oformula, Connective::kPst, "!F");
    Cirquent p = c;
    p.oformulas[x->oformula - 1] = f.body();
    p.overgroups.push_back({x->oformula - 1});
    return p;
  }
  if (auto* x = std::get_if<rule::PcostIntro>(&r)) {
    const Formula& f = detail::expect_kind(c, x->oformula, Connective::kPcost, "?F");
    const std::size_t a = x->oformula - 1;
    Cirquent p = c;
    p.oformulas[a] = f.body();
    for (std::size_t j : x->added_overgroups) {
      detail::check_index(j, c.overgroups.size(), "overgroup");
      if (c.overgroups[j - 1].count(a)) {
        throw RuleError("overgroup " + std::to_string(j) + " already contains oformula " + std::to_string(a + 1));
      }
      p.overgroups[j - 1].insert(a);
    }
    return p;
  }
  throw RuleError("rule " + rule_name(r) + " is not applied conclusion-to-premise");
}

inline std::optional<Violation> check_step(const Cirquent& premise, const Cirquent& conclusion,
                                           const RuleInstance& r) {
  if (std::holds_alternative<rule::Axiom>(r)) return Violation{"axiom takes no premise"};
  if (auto p = validate_cirquent(premise); !p.empty()) return Violation{"invalid premise: " + p.front()};
  if (auto p = validate_cirquent(conclusion); !p.empty()) return Violation{"invalid conclusion: " + p.front()};
  try {
    if (is_forward_rule(r)) return detail::compare_cirquents(apply_forward(premise, r), conclusion);
    auto v = detail::compare_cirquents(construct_premise(conclusion, r), premise);
    if (v) v->what = "premise " + v->what;
    return v;
  } catch (const RuleError& e) {
    return Violation{e.what()};
  }
}

// ---------------------------------------------------------------------------
// Proofs.

struct ProofStep {
  Cirquent cirquent;
  RuleInstance rule;
};

struct Proof {
  std::vector<ProofStep> steps;
};

struct ProofFailure {
  std::size_t step;  // 1-based
  std::string what;
};

inline std::optional<ProofFailure> verify_proof(const Proof& proof, const std::optional<Formula>& goal = std::nullopt) {
  if (proof.steps.empty()) return ProofFailure{0, "empty proof"};
  for (std::size_t k = 0; k < proof.steps.size(); ++k) {
    const auto& s = proof.steps[k];
    if (auto v = validate_cirquent(s.cirquent); !v.empty()) return ProofFailure{k + 1, "invalid cirquent: " + v.front()};
    if (k == 0) {
      auto* ax = std::get_if<rule::Axiom>(&s.rule);
      if (!ax) return ProofFailure{1, "first step must be an axiom, found " + rule_name(s.rule)};
      std::string why;
      if (!check_axiom(s.cirquent, ax->formulas, &why)) return ProofFailure{1, why};
      continue;
    }
    if (auto v = check_step(proof.steps[k - 1].cirquent, s.cirquent, s.rule)) {
      return ProofFailure{k + 1, rule_name(s.rule) + ": " + v->what};
    }
  }
  if (goal && !(proof.steps.back().cirquent == clubsuit(*goal))) {
    return ProofFailure{proof.steps.size(), "last cirquent is not the single-oformula cirquent of " +
                                                render_formula(*goal)};
  }
  return std::nullopt;
}

// The formula F when the last cirquent of the proof has the form F♣.
inline std::optional<Formula> proved_formula(const Proof& proof) {
  if (proof.steps.empty()) return std::nullopt;
  const Cirquent& c = proof.steps.back().cirquent;
  if (c.size() == 1 && c == clubsuit(c.oformulas[0])) return c.oformulas[0];
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Proof file format:
//
//   # comment
//   step 1: rule=axiom
//   oformulas: ~P | P ; under: {1,2} ; over: {1,2}
//   step 2: rule=or oformula=1
//   oformulas: ~P \/ P ; under: {1} ; over: {1}
//
// A cirquent may span several lines; it ends at the next step header.

namespace detail {

inline std::map<std::string, std::string> parse_params(const std::string& text) {
  std::map<std::string, std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    const auto eq = text.find('=', i);
    if (eq == std::string::npos) throw ParseError("malformed parameter '" + text.substr(i) + "'");
    const std::string key = text.substr(i, eq - i);
    if (key.empty() || key.find(' ') != std::string::npos) throw ParseError("malformed parameter name");
    std::string value;
    i = eq + 1;
    if (i < text.size() && text[i] == '"') {
      const auto close = text.find('"', i + 1);
      if (close == std::string::npos) throw ParseError("unterminated quoted value for " + key);
      value = text.substr(i + 1, close - i - 1);
      i = close + 1;
    } else {
      const auto end = text.find_first_of(" \t", i);
      value = text.substr(i, end == std::string::npos ? std::string::npos : end - i);
      i = end == std::string::npos ? text.size() : end;
    }
    if (!out.emplace(key, value).second) throw ParseError("duplicate parameter " + key);
  }
  return out;
}

inline RuleInstance make_rule(const std::map<std::string, std::string>& params) {
  std::set<std::string> used{"rule"};
  auto get = [&](const std::string& key) -> std::string {
    auto it = params.find(key);
    if (it == params.end()) throw ParseError("missing parameter " + key);
    used.insert(key);
    return it->second;
  };
  auto num = [&](const std::string& key) -> std::size_t {
    const std::string v = get(key);
    auto n = parse_positive(v);
    if (!n) throw ParseError("parameter " + key + " must be a positive integer, got '" + v + "'");
    return static_cast<std::size_t>(*n);
  };
  const std::string name = get("rule");
  RuleInstance r;
  if (name == "axiom") {
    rule::Axiom ax;
    if (params.count("formulas")) {
      std::istringstream in(get("formulas"));
      std::string f;
      while (std::getline(in, f, '|')) ax.formulas.push_back(parse_formula(f));
    }
    r = ax;
  } else if (name == "oformula-exchange") {
    r = rule::OformulaExchange{num("oformula")};
  } else if (name == "undergroup-exchange") {
    r = rule::UndergroupExchange{num("under")};
  } else if (name == "overgroup-exchange") {
    r = rule::OvergroupExchange{num("over")};
  } else if (name == "undergroup-duplication") {
    r = rule::UndergroupDuplication{num("under")};
  } else if (name == "overgroup-duplication") {
    r = rule::OvergroupDuplication{num("over")};
  } else if (name == "merging") {
    r = rule::Merging{num("over")};
  } else if (name == "weakening") {
    r = rule::Weakening{num("under"), num("oformula")};
  } else if (name == "contraction") {
    r = rule::Contraction{num("oformula")};
  } else if (name == "or") {
    r = rule::OrIntro{num("oformula")};
  } else if (name == "and") {
    r = rule::AndIntro{num("oformula")};
  } else if (name == "pst") {
    r = rule::PstIntro{num("oformula")};
  } else if (name == "pcost") {
    rule::PcostIntro p{num("oformula"), {}};
    if (params.count("add_over")) {
      const std::string v = trim(get("add_over"));
      if (v.size() < 2 || v.front() != '{' || v.back() != '}') {
        throw ParseError("add_over must look like {i,j,...}");
      }
      std::istringstream in(v.substr(1, v.size() - 2));
      std::string item;
      while (std::getline(in, item, ',')) {
        auto n = parse_positive(trim(item));
        if (!n) throw ParseError("malformed overgroup index '" + trim(item) + "' in add_over");
        p.added_overgroups.insert(static_cast<std::size_t>(*n));
      }
    }
    r = p;
  } else {
    throw ParseError("unknown rule '" + name + "'");
  }
  for (const auto& [key, _] : params) {
    if (!used.count(key)) throw ParseError("unexpected parameter " + key + " for rule " + name);
  }
  return r;
}

inline std::string rule_params(const RuleInstance& r) {
  std::string out = "rule=" + rule_name(r);
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, rule::Axiom>) {
          if (!x.formulas.empty()) {
            out += " formulas=\"";
            for (std::size_t i = 0; i < x.formulas.size(); ++i) {
              if (i) out += " | ";
              out += render_formula(x.formulas[i]);
            }
            out += "\"";
          }
        } else if constexpr (std::is_same_v<T, rule::OformulaExchange>) {
          out += " oformula=" + std::to_string(x.position);
        } else if constexpr (std::is_same_v<T, rule::UndergroupExchange> ||
                             std::is_same_v<T, rule::UndergroupDuplication>) {
          out += " under=" + std::to_string(x.position);
        } else if constexpr (std::is_same_v<T, rule::OvergroupExchange> ||
                             std::is_same_v<T, rule::OvergroupDuplication> || std::is_same_v<T, rule::Merging>) {
          out += " over=" + std::to_string(x.position);
        } else if constexpr (std::is_same_v<T, rule::Weakening>) {
          out += " under=" + std::to_string(x.undergroup) + " oformula=" + std::to_string(x.oformula);
        } else if constexpr (std::is_same_v<T, rule::PcostIntro>) {
          out += " oformula=" + std::to_string(x.oformula);
          if (!x.added_overgroups.empty()) {
            out += " add_over={";
            bool first = true;
            for (std::size_t j : x.added_overgroups) {
              if (!first) out += ",";
              out += std::to_string(j);
              first = false;
            }
            out += "}";
          }
        } else {
          out += " oformula=" + std::to_string(x.oformula);
        }
      },
      r);
  return out;
}

}  // namespace detail

inline Proof parse_proof(std::string_view text) {
  Proof proof;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0, header_line = 0;
  std::optional<RuleInstance> pending;
  std::string body;
  auto flush = [&] {
    if (!pending) return;
    try {
      proof.steps.push_back({parse_cirquent(body), *pending});
    } catch (const std::exception& e) {
      throw ParseError("line " + std::to_string(header_line) + ": step " + std::to_string(proof.steps.size() + 1) +
                       ": " + e.what());
    }
    pending.reset();
    body.clear();
  };
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.rfind("step", 0) == 0 && t.size() > 4 && std::isspace(static_cast<unsigned char>(t[4]))) {
      flush();
      header_line = lineno;
      const auto colon = t.find(':');
      if (colon == std::string::npos) throw ParseError("line " + std::to_string(lineno) + ": missing ':' after step");
      auto k = parse_positive(trim(std::string_view(t).substr(4, colon - 4)));
      if (!k || *k != proof.steps.size() + 1) {
        throw ParseError("line " + std::to_string(lineno) + ": expected step " + std::to_string(proof.steps.size() + 1));
      }
      try {
        pending = detail::make_rule(detail::parse_params(t.substr(colon + 1)));
      } catch (const std::exception& e) {
        throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
      }
      continue;
    }
    if (!pending) throw ParseError("line " + std::to_string(lineno) + ": text before the first step header");
    body += t + " ";
  }
  flush();
  if (proof.steps.empty()) throw ParseError("proof has no steps");
  return proof;
}

inline std::string render_proof(const Proof& proof) {
  std::string out;
  for (std::size_t k = 0; k < proof.steps.size(); ++k) {
    out += "step " + std::to_string(k + 1) + ": " + detail::rule_params(proof.steps[k].rule) + "\n";
    out += render_cirquent(proof.steps[k].cirquent) + "\n";
  }
  return out;
}

}  // namespace cl15
