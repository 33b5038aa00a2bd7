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

// Formulas over the signature (~, /\, \/, !, ?, b!, b?) in negation normal
// form, together with a parser for the ASCII surface syntax:
//
//   formula := impl ; impl := or ("->" impl)? ; or := and ("\/" and)* ;
//   and := unary ("/\" unary)* ;
//   unary := ("~"|"!"|"?"|"b!"|"b?") unary | atom | "(" formula ")" ;
//   atom := [A-Z][A-Za-z0-9]*

#pragma once

#include <cctype>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cl15/error.hpp"

namespace cl15 {

enum class Connective {
  kAtom,
  kNegAtom,
  kAnd,
  kOr,
  kPst,    // parallel recurrence, written "!"
  kPcost,  // parallel corecurrence, written "?"
  kSt,     // branching recurrence, written "b!"
  kCost,   // branching corecurrence, written "b?"
};

inline bool is_binary(Connective c) { return c == Connective::kAnd || c == Connective::kOr; }
inline bool is_unary(Connective c) {
  return c == Connective::kPst || c == Connective::kPcost || c == Connective::kSt ||
         c == Connective::kCost;
}

// Immutable NNF formula. Copies share structure.
class Formula {
 public:
  static Formula atom(std::string name) { return Formula(Connective::kAtom, std::move(name)); }
  static Formula neg_atom(std::string name) {
    return Formula(Connective::kNegAtom, std::move(name));
  }
  static Formula conj(Formula l, Formula r) { return Formula(Connective::kAnd, l, r); }
  static Formula disj(Formula l, Formula r) { return Formula(Connective::kOr, l, r); }
  static Formula pst(Formula body) { return Formula(Connective::kPst, body); }
  static Formula pcost(Formula body) { return Formula(Connective::kPcost, body); }
  static Formula st(Formula body) { return Formula(Connective::kSt, body); }
  static Formula cost(Formula body) { return Formula(Connective::kCost, body); }
  static Formula unary(Connective c, Formula body) { return Formula(c, body); }
  static Formula binary(Connective c, Formula l, Formula r) { return Formula(c, l, r); }

  Connective kind() const { return node_->kind; }
  bool is_literal() const {
    return kind() == Connective::kAtom || kind() == Connective::kNegAtom;
  }
  const std::string& atom_name() const { return node_->atom; }
  // Left operand of a binary formula, or the body of a unary one.
  Formula left() const { return Formula(node_->left); }
  Formula right() const { return Formula(node_->right); }
  Formula body() const { return Formula(node_->left); }

  friend bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    if (a.is_literal()) return a.atom_name() == b.atom_name();
    if (a.left() != b.left()) return false;
    return !is_binary(a.kind()) || a.right() == b.right();
  }

 private:
  struct Node {
    Connective kind;
    std::string atom;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  Formula(Connective c, std::string name)
      : node_(std::make_shared<const Node>(Node{c, std::move(name), nullptr, nullptr})) {}
  Formula(Connective c, const Formula& body)
      : node_(std::make_shared<const Node>(Node{c, {}, body.node_, nullptr})) {}
  Formula(Connective c, const Formula& l, const Formula& r)
      : node_(std::make_shared<const Node>(Node{c, {}, l.node_, r.node_})) {}

  std::shared_ptr<const Node> node_;
};

// De Morgan dual of an NNF formula; the result is again NNF.
inline Formula dual(const Formula& f) {
  switch (f.kind()) {
    case Connective::kAtom: return Formula::neg_atom(f.atom_name());
    case Connective::kNegAtom: return Formula::atom(f.atom_name());
    case Connective::kAnd: return Formula::disj(dual(f.left()), dual(f.right()));
    case Connective::kOr: return Formula::conj(dual(f.left()), dual(f.right()));
    case Connective::kPst: return Formula::pcost(dual(f.body()));
    case Connective::kPcost: return Formula::pst(dual(f.body()));
    case Connective::kSt: return Formula::cost(dual(f.body()));
    case Connective::kCost: return Formula::st(dual(f.body()));
  }
  return f;
}

inline void collect_atoms(const Formula& f, std::set<std::string>& out) {
  if (f.is_literal()) {
    out.insert(f.atom_name());
  } else {
    collect_atoms(f.left(), out);
    if (is_binary(f.kind())) collect_atoms(f.right(), out);
  }
}

inline std::size_t formula_depth(const Formula& f) {
  if (f.is_literal()) return 0;
  std::size_t d = formula_depth(f.left());
  if (is_binary(f.kind())) d = std::max(d, formula_depth(f.right()));
  return d + 1;
}

// Formula with negation allowed anywhere: the parser's intermediate form.
struct RawFormula {
  enum class Kind { kAtom, kNot, kAnd, kOr, kPst, kPcost, kSt, kCost };
  Kind kind;
  std::string atom;
  std::shared_ptr<const RawFormula> left;
  std::shared_ptr<const RawFormula> right;

  static RawFormula make_atom(std::string name) { return {Kind::kAtom, std::move(name), {}, {}}; }
  static RawFormula make_not(RawFormula f) {
    return {Kind::kNot, {}, std::make_shared<const RawFormula>(std::move(f)), {}};
  }
  static RawFormula make_unary(Kind k, RawFormula f) {
    return {k, {}, std::make_shared<const RawFormula>(std::move(f)), {}};
  }
  static RawFormula make_binary(Kind k, RawFormula l, RawFormula r) {
    return {k, {}, std::make_shared<const RawFormula>(std::move(l)),
            std::make_shared<const RawFormula>(std::move(r))};
  }
};

inline RawFormula to_raw(const Formula& f) {
  using K = RawFormula::Kind;
  switch (f.kind()) {
    case Connective::kAtom: return RawFormula::make_atom(f.atom_name());
    case Connective::kNegAtom: return RawFormula::make_not(RawFormula::make_atom(f.atom_name()));
    case Connective::kAnd: return RawFormula::make_binary(K::kAnd, to_raw(f.left()), to_raw(f.right()));
    case Connective::kOr: return RawFormula::make_binary(K::kOr, to_raw(f.left()), to_raw(f.right()));
    case Connective::kPst: return RawFormula::make_unary(K::kPst, to_raw(f.body()));
    case Connective::kPcost: return RawFormula::make_unary(K::kPcost, to_raw(f.body()));
    case Connective::kSt: return RawFormula::make_unary(K::kSt, to_raw(f.body()));
    case Connective::kCost: return RawFormula::make_unary(K::kCost, to_raw(f.body()));
  }
  return RawFormula::make_atom(f.atom_name());
}

namespace detail {

inline Formula normalize(const RawFormula& f, bool negated) {
  using K = RawFormula::Kind;
  switch (f.kind) {
    case K::kAtom:
      return negated ? Formula::neg_atom(f.atom) : Formula::atom(f.atom);
    case K::kNot:
      return normalize(*f.left, !negated);
    case K::kAnd:
    case K::kOr: {
      const bool conj = (f.kind == K::kAnd) != negated;
      Formula l = normalize(*f.left, negated);
      Formula r = normalize(*f.right, negated);
      return conj ? Formula::conj(l, r) : Formula::disj(l, r);
    }
    case K::kPst: return negated ? Formula::pcost(normalize(*f.left, true)) : Formula::pst(normalize(*f.left, false));
    case K::kPcost: return negated ? Formula::pst(normalize(*f.left, true)) : Formula::pcost(normalize(*f.left, false));
    case K::kSt: return negated ? Formula::cost(normalize(*f.left, true)) : Formula::st(normalize(*f.left, false));
    case K::kCost: return negated ? Formula::st(normalize(*f.left, true)) : Formula::cost(normalize(*f.left, false));
  }
  return Formula::atom(f.atom);
}

enum class TokenKind { kNot, kAnd, kOr, kImplies, kPst, kPcost, kSt, kCost, kLParen, kRParen, kAtom, kEnd };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t pos;
};

inline std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto two = [&](char a, char b) { return i + 1 < s.size() && s[i] == a && s[i + 1] == b; };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (two('/', '\\')) {
      out.push_back({TokenKind::kAnd, "/\\", start});
      i += 2;
    } else if (two('\\', '/')) {
      out.push_back({TokenKind::kOr, "\\/", start});
      i += 2;
    } else if (two('-', '>')) {
      out.push_back({TokenKind::kImplies, "->", start});
      i += 2;
    } else if (two('b', '!')) {
      out.push_back({TokenKind::kSt, "b!", start});
      i += 2;
    } else if (two('b', '?')) {
      out.push_back({TokenKind::kCost, "b?", start});
      i += 2;
    } else if (c == '~') {
      out.push_back({TokenKind::kNot, "~", start});
      ++i;
    } else if (c == '!') {
      out.push_back({TokenKind::kPst, "!", start});
      ++i;
    } else if (c == '?') {
      out.push_back({TokenKind::kPcost, "?", start});
      ++i;
    } else if (c == '(') {
      out.push_back({TokenKind::kLParen, "(", start});
      ++i;
    } else if (c == ')') {
      out.push_back({TokenKind::kRParen, ")", start});
      ++i;
    } else if (c >= 'A' && c <= 'Z') {
      while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({TokenKind::kAtom, std::string(s.substr(start, i - start)), start});
    } else {
      throw ParseError("unknown token '" + std::string(1, c) + "' at position " +
                       std::to_string(start));
    }
  }
  out.push_back({TokenKind::kEnd, "", s.size()});
  return out;
}

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : tokens_(tokenize(text)) {}

  RawFormula parse() {
    RawFormula f = implication();
    if (peek().kind != TokenKind::kEnd) fail("unexpected '" + peek().text + "'");
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("syntax error: " + what + " at position " + std::to_string(peek().pos));
  }

  RawFormula implication() {
    RawFormula lhs = disjunction();
    if (peek().kind == TokenKind::kImplies) {
      take();
      RawFormula rhs = implication();
      return RawFormula::make_binary(RawFormula::Kind::kOr, RawFormula::make_not(std::move(lhs)),
                                     std::move(rhs));
    }
    return lhs;
  }

  RawFormula disjunction() {
    RawFormula lhs = conjunction();
    while (peek().kind == TokenKind::kOr) {
      take();
      lhs = RawFormula::make_binary(RawFormula::Kind::kOr, std::move(lhs), conjunction());
    }
    return lhs;
  }

  RawFormula conjunction() {
    RawFormula lhs = prefixed();
    while (peek().kind == TokenKind::kAnd) {
      take();
      lhs = RawFormula::make_binary(RawFormula::Kind::kAnd, std::move(lhs), prefixed());
    }
    return lhs;
  }

  RawFormula prefixed() {
    using K = RawFormula::Kind;
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::kNot: {
        take();
        if (!starts_formula(peek().kind)) fail("negation of non-formula");
        return RawFormula::make_not(prefixed());
      }
      case TokenKind::kPst: take(); return RawFormula::make_unary(K::kPst, operand());
      case TokenKind::kPcost: take(); return RawFormula::make_unary(K::kPcost, operand());
      case TokenKind::kSt: take(); return RawFormula::make_unary(K::kSt, operand());
      case TokenKind::kCost: take(); return RawFormula::make_unary(K::kCost, operand());
      case TokenKind::kAtom: return RawFormula::make_atom(take().text);
      case TokenKind::kLParen: {
        take();
        RawFormula inner = implication();
        if (peek().kind != TokenKind::kRParen) fail("expected ')'");
        take();
        return inner;
      }
      default:
        fail(t.kind == TokenKind::kEnd ? "unexpected end of input" : "unexpected '" + t.text + "'");
    }
  }

  RawFormula operand() {
    if (!starts_formula(peek().kind)) fail("operator without operand");
    return prefixed();
  }

  static bool starts_formula(TokenKind k) {
    return k == TokenKind::kNot || k == TokenKind::kPst || k == TokenKind::kPcost ||
           k == TokenKind::kSt || k == TokenKind::kCost || k == TokenKind::kAtom ||
           k == TokenKind::kLParen;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

inline std::string render_operand(const Formula& f);

inline std::string render(const Formula& f) {
  switch (f.kind()) {
    case Connective::kAtom: return f.atom_name();
    case Connective::kNegAtom: return "~" + f.atom_name();
    case Connective::kPst: return "!" + render_operand(f.body());
    case Connective::kPcost: return "?" + render_operand(f.body());
    case Connective::kSt: return "b!" + render_operand(f.body());
    case Connective::kCost: return "b?" + render_operand(f.body());
    case Connective::kAnd:
    case Connective::kOr: {
      const Connective op = f.kind();
      const Formula l = f.left();
      const Formula r = f.right();
      // Both binary connectives associate to the left; `/\` binds tighter.
      const bool paren_l = op == Connective::kAnd && l.kind() == Connective::kOr;
      const bool paren_r =
          r.kind() == op || (op == Connective::kAnd && r.kind() == Connective::kOr);
      std::string out = paren_l ? "(" + render(l) + ")" : render(l);
      out += op == Connective::kAnd ? " /\\ " : " \\/ ";
      out += paren_r ? "(" + render(r) + ")" : render(r);
      return out;
    }
  }
  return {};
}

inline std::string render_operand(const Formula& f) {
  return is_binary(f.kind()) ? "(" + render(f) + ")" : render(f);
}

}  // namespace detail

inline Formula normalize_negation(const RawFormula& f) { return detail::normalize(f, false); }

inline RawFormula parse_raw_formula(std::string_view text) {
  return detail::FormulaParser(text).parse();
}

inline Formula parse_formula(std::string_view text) {
  return normalize_negation(parse_raw_formula(text));
}

inline std::string render_formula(const Formula& f) { return detail::render(f); }

}  // namespace cl15
