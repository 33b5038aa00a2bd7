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

// Moves, labmoves, runs and the projections every game operator is defined
// through.
//
// Move shapes used throughout the library:
//   formula level   "<i>.<rest>"  i in {1,2} for /\ and \/
//                   "<u>.<rest>"  u >= 1 for ! and ?
//                   "<w>.<rest>"  w a (possibly empty) bitstring for b! and b?
//   cirquent level  "<a>;<u1>,...,<un>.<rest>"  a >= 1, uj >= 0
//                   "<a>;.<rest>"               when there are no overgroups

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cl15/error.hpp"

namespace cl15 {

enum class Player { kTop, kBot };

inline Player opponent(Player p) { return p == Player::kTop ? Player::kBot : Player::kTop; }
inline char player_char(Player p) { return p == Player::kTop ? 'T' : 'B'; }

struct Labmove {
  Player player;
  std::string move;

  friend auto operator<=>(const Labmove&, const Labmove&) = default;
  friend bool operator==(const Labmove&, const Labmove&) = default;
};

using Run = std::vector<Labmove>;

inline Labmove top(std::string move) { return {Player::kTop, std::move(move)}; }
inline Labmove bot(std::string move) { return {Player::kBot, std::move(move)}; }

inline Run concat(Run a, const Run& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline Run prefix_of(const Run& r, std::size_t n) {
  return Run(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(std::min(n, r.size())));
}

// ---------------------------------------------------------------------------
// Text form: one labmove per line, "T <move>" or "B <move>"; '#' starts a
// comment line.

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

inline Labmove parse_labmove(std::string_view text) {
  const std::string line = trim(text);
  if (line.empty()) throw ParseError("empty labmove");
  Player p;
  if (line[0] == 'T') {
    p = Player::kTop;
  } else if (line[0] == 'B') {
    p = Player::kBot;
  } else {
    throw ParseError("unknown label '" + std::string(1, line[0]) + "'");
  }
  if (line.size() < 2 || (line[1] != ' ' && line[1] != '\t')) {
    throw ParseError(line.size() < 2 ? "empty move" : "malformed labmove '" + line + "'");
  }
  std::string move = trim(std::string_view(line).substr(1));
  if (move.empty()) throw ParseError("empty move");
  for (char c : move) {
    if (c <= ' ' || c > '~') throw ParseError("move contains a non-printable or blank character");
  }
  return {p, move};
}

inline Run parse_run(std::string_view text) {
  Run run;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    try {
      run.push_back(parse_labmove(t));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return run;
}

inline std::string render_labmove(const Labmove& m) { return std::string(1, player_char(m.player)) + " " + m.move; }

inline std::string render_run(const Run& run) {
  std::string out;
  for (const auto& m : run) out += render_labmove(m) + "\n";
  return out;
}

// Compact single-line form used in diagnostics: <T1.a,B2.b>.
inline std::string show_run(const Run& run) {
  std::string out = "<";
  for (std::size_t i = 0; i < run.size(); ++i) {
    if (i) out += ",";
    out += player_char(run[i].player);
    out += run[i].move;
  }
  return out + ">";
}

// ---------------------------------------------------------------------------
// Lexical helpers for structured moves.

inline bool is_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

// Canonical decimal natural number: "0" or digits without a leading zero.
inline std::optional<std::uint64_t> parse_natural(std::string_view s) {
  if (!is_digits(s) || s.size() > 18) return std::nullopt;
  if (s.size() > 1 && s[0] == '0') return std::nullopt;
  std::uint64_t v = 0;
  for (char c : s) v = v * 10 + static_cast<std::uint64_t>(c - '0');
  return v;
}

inline std::optional<std::uint64_t> parse_positive(std::string_view s) {
  auto v = parse_natural(s);
  if (!v || *v == 0) return std::nullopt;
  return v;
}

inline bool is_positive_decimal(std::string_view s) {
  return is_digits(s) && s[0] != '0';
}

inline bool is_bitstring(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

// Splits "head.rest" at the first '.'.
inline std::optional<std::pair<std::string_view, std::string_view>> split_head(std::string_view move) {
  const auto dot = move.find('.');
  if (dot == std::string_view::npos) return std::nullopt;
  return std::make_pair(move.substr(0, dot), move.substr(dot + 1));
}

struct CellMove {
  std::uint64_t oformula = 0;  // 1-based
  std::vector<std::uint64_t> coords;
  std::string rest;

  std::string render() const {
    std::string out = std::to_string(oformula) + ";";
    for (std::size_t j = 0; j < coords.size(); ++j) {
      if (j) out += ",";
      out += std::to_string(coords[j]);
    }
    return out + "." + rest;
  }
  friend bool operator==(const CellMove&, const CellMove&) = default;
};

// Parses "<a>;<u1>,...,<un>.<rest>" (or "<a>;.<rest>" for n = 0).
inline std::optional<CellMove> parse_cell_move(std::string_view move) {
  const auto semi = move.find(';');
  if (semi == std::string_view::npos) return std::nullopt;
  auto a = parse_positive(move.substr(0, semi));
  if (!a) return std::nullopt;
  const auto after = move.substr(semi + 1);
  const auto dot = after.find('.');
  if (dot == std::string_view::npos) return std::nullopt;
  CellMove out;
  out.oformula = *a;
  out.rest = std::string(after.substr(dot + 1));
  std::string_view coords = after.substr(0, dot);
  if (!coords.empty()) {
    std::size_t start = 0;
    while (true) {
      const auto comma = coords.find(',', start);
      const auto piece = coords.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      auto v = parse_natural(piece);
      if (!v) return std::nullopt;
      out.coords.push_back(*v);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Projections.

inline Run negate_run(const Run& run) {
  Run out;
  out.reserve(run.size());
  for (const auto& m : run) out.push_back({opponent(m.player), m.move});
  return out;
}

// Keeps the moves of shape prefix.beta and strips the prefix.
inline Run project_prefix(const Run& run, std::string_view prefix) {
  Run out;
  for (const auto& m : run) {
    if (m.move.size() >= prefix.size() && std::string_view(m.move).substr(0, prefix.size()) == prefix) {
      out.push_back({m.player, m.move.substr(prefix.size())});
    }
  }
  return out;
}

// Eventually periodic infinite bitstring stem.tail.tail...
struct InfiniteBitstring {
  std::string stem;
  std::string tail = "0";

  char bit(std::size_t i) const {
    if (i < stem.size()) return stem[i];
    return tail[(i - stem.size()) % tail.size()];
  }

  bool has_prefix(std::string_view w) const {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] != bit(i)) return false;
    }
    return true;
  }

  std::string show() const { return stem + "(" + tail + ")^w"; }

  // Parses "stem:tail"; a missing ":tail" means tail "0".
  static InfiniteBitstring parse(std::string_view text) {
    InfiniteBitstring x;
    const auto colon = text.find(':');
    x.stem = std::string(text.substr(0, colon));
    if (colon != std::string_view::npos) x.tail = std::string(text.substr(colon + 1));
    if (!is_bitstring(x.stem) || !is_bitstring(x.tail) || x.tail.empty()) {
      throw ParseError("malformed infinite bitstring '" + std::string(text) + "'");
    }
    return x;
  }

  friend bool operator==(const InfiniteBitstring&, const InfiniteBitstring&) = default;
};

// Keeps the moves "u.beta" with u an initial segment of x and strips "u.".
inline Run project_branch(const Run& run, const InfiniteBitstring& x) {
  Run out;
  for (const auto& m : run) {
    auto parts = split_head(m.move);
    if (!parts || !is_bitstring(parts->first)) continue;
    if (x.has_prefix(parts->first)) out.push_back({m.player, std::string(parts->second)});
  }
  return out;
}

class ArityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Keeps the moves "a;u1,...,un.beta" where every nonzero uj equals xj, and
// strips everything through the first '.'. A matching move with the wrong
// number of coordinates raises ArityError.
inline Run project_cell(const Run& run, std::uint64_t a, std::span<const std::uint64_t> xs) {
  Run out;
  for (const auto& m : run) {
    auto cm = parse_cell_move(m.move);
    if (!cm || cm->oformula != a) continue;
    if (cm->coords.size() != xs.size()) {
      throw ArityError("move '" + m.move + "' has " + std::to_string(cm->coords.size()) +
                       " coordinates, expected " + std::to_string(xs.size()));
    }
    bool keep = true;
    for (std::size_t j = 0; j < xs.size() && keep; ++j) {
      keep = cm->coords[j] == 0 || cm->coords[j] == xs[j];
    }
    if (keep) out.push_back({m.player, cm->rest});
  }
  return out;
}

inline Run project_cell(const Run& run, std::uint64_t a, std::initializer_list<std::uint64_t> xs) {
  const std::vector<std::uint64_t> v(xs);
  return project_cell(run, a, std::span<const std::uint64_t>(v));
}

// Representatives of the infinite bitstrings, up to "which members of W are
// initial segments of x". For every node p of the trie of W, p0(0)^w and
// p1(0)^w are emitted; every class is hit because the first bit of x that
// leaves the trie can be followed by zeros without changing the class.
inline std::vector<InfiniteBitstring> thread_representatives(const std::set<std::string>& words) {
  std::set<std::string> nodes{""};
  for (const auto& w : words) {
    for (std::size_t n = 0; n <= w.size(); ++n) nodes.insert(w.substr(0, n));
  }
  std::vector<InfiniteBitstring> reps;
  std::set<std::vector<bool>> seen;
  for (const auto& p : nodes) {
    for (char b : {'0', '1'}) {
      InfiniteBitstring x{p + b, "0"};
      std::vector<bool> signature;
      signature.reserve(words.size());
      for (const auto& w : words) signature.push_back(x.has_prefix(w));
      if (seen.insert(signature).second) reps.push_back(std::move(x));
    }
  }
  return reps;
}

// Bitstring heads of the moves "w.beta" of a run.
inline std::set<std::string> touched_bitstrings(const Run& run) {
  std::set<std::string> out;
  for (const auto& m : run) {
    auto parts = split_head(m.move);
    if (parts && is_bitstring(parts->first)) out.insert(std::string(parts->first));
  }
  return out;
}

}  // namespace cl15
