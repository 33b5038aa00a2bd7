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

#pragma once

#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cl15/error.hpp"
#include "cl15/formula.hpp"
#include "cl15/runs.hpp"

namespace cl15 {

// A group is a set of 0-based oformula positions. Groups are positional:
// two groups with equal contents are still different groups.
using Group = std::set<std::size_t>;

struct Cirquent {
  std::vector<Formula> oformulas;
  std::vector<Group> undergroups;
  std::vector<Group> overgroups;

  std::size_t size() const { return oformulas.size(); }

  // 0-based indices of the overgroups containing oformula a.
  std::vector<std::size_t> overgroups_of(std::size_t a) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < overgroups.size(); ++j) {
      if (overgroups[j].count(a)) out.push_back(j);
    }
    return out;
  }

  friend bool operator==(const Cirquent&, const Cirquent&) = default;
};

// Empty result means valid.
inline std::vector<std::string> validate_cirquent(const Cirquent& c) {
  std::vector<std::string> v;
  const std::size_t k = c.oformulas.size();
  if (k == 0) v.push_back("no oformulas");
  if (c.undergroups.empty()) v.push_back("no undergroups");
  if (c.overgroups.empty()) v.push_back("no overgroups");
  auto check_groups = [&](const std::vector<Group>& groups, const char* name) {
    for (std::size_t i = 0; i < groups.size(); ++i) {
      if (groups[i].empty()) v.push_back(std::string("empty ") + name + " " + std::to_string(i + 1));
      for (std::size_t a : groups[i]) {
        if (a >= k) {
          v.push_back(std::string(name) + " " + std::to_string(i + 1) + " references oformula " +
                      std::to_string(a + 1) + " out of range");
        }
      }
    }
  };
  check_groups(c.undergroups, "undergroup");
  check_groups(c.overgroups, "overgroup");
  for (std::size_t a = 0; a < k; ++a) {
    auto in_some = [a](const std::vector<Group>& gs) {
      for (const auto& g : gs) {
        if (g.count(a)) return true;
      }
      return false;
    };
    if (!in_some(c.undergroups)) v.push_back("oformula " + std::to_string(a + 1) + " in no undergroup");
    if (!in_some(c.overgroups)) v.push_back("oformula " + std::to_string(a + 1) + " in no overgroup");
  }
  return v;
}

inline bool is_valid(const Cirquent& c) { return validate_cirquent(c).empty(); }

inline Cirquent clubsuit(const Formula& f) { return Cirquent{{f}, {{0}}, {{0}}}; }

inline std::set<std::string> atoms_of(const Cirquent& c) {
  std::set<std::string> out;
  for (const auto& f : c.oformulas) collect_atoms(f, out);
  return out;
}

// ---------------------------------------------------------------------------
// Text form:  oformulas: f1 | f2 | ... ; under: {1,2}{2} ; over: {1}{2}

namespace detail {

inline std::vector<Group> parse_groups(std::string_view text, std::size_t k, const char* name) {
  std::vector<Group> groups;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '{') throw ParseError(std::string("malformed set syntax in ") + name + " groups");
    const auto close = text.find('}', i);
    if (close == std::string_view::npos) {
      throw ParseError(std::string("unterminated set in ") + name + " groups");
    }
    const std::string body = trim(text.substr(i + 1, close - i - 1));
    Group g;
    if (!body.empty()) {
      std::istringstream items(body);
      std::string item;
      while (std::getline(items, item, ',')) {
        auto idx = parse_positive(trim(item));
        if (!idx) throw ParseError(std::string("malformed index '") + trim(item) + "' in " + name + " group");
        if (*idx > k) {
          throw ParseError(std::string(name) + " group index " + std::to_string(*idx) + " out of range");
        }
        g.insert(static_cast<std::size_t>(*idx - 1));
      }
    }
    if (g.empty()) throw ParseError(std::string("empty ") + name + " group");
    groups.push_back(std::move(g));
    i = close + 1;
    skip_ws();
  }
  if (groups.empty()) throw ParseError(std::string("no ") + name + " groups");
  return groups;
}

inline std::string render_groups(const std::vector<Group>& groups) {
  std::string out;
  for (const auto& g : groups) {
    out += "{";
    bool first = true;
    for (std::size_t a : g) {
      if (!first) out += ",";
      out += std::to_string(a + 1);
      first = false;
    }
    out += "}";
  }
  return out;
}

}  // namespace detail

inline Cirquent parse_cirquent(std::string_view text) {
  std::string oformulas_text, under_text, over_text;
  bool have_f = false, have_u = false, have_o = false;
  std::istringstream sections{std::string(text)};
  std::string section;
  while (std::getline(sections, section, ';')) {
    const std::string s = trim(section);
    if (s.empty()) continue;
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw ParseError("malformed cirquent section '" + s + "'");
    const std::string key = trim(std::string_view(s).substr(0, colon));
    const std::string value = trim(std::string_view(s).substr(colon + 1));
    if (key == "oformulas") {
      oformulas_text = value;
      have_f = true;
    } else if (key == "under") {
      under_text = value;
      have_u = true;
    } else if (key == "over") {
      over_text = value;
      have_o = true;
    } else {
      throw ParseError("unknown cirquent section '" + key + "'");
    }
  }
  if (!have_f || !have_u || !have_o) throw ParseError("cirquent needs oformulas, under and over sections");
  Cirquent c;
  std::istringstream fs(oformulas_text);
  std::string ftext;
  while (std::getline(fs, ftext, '|')) c.oformulas.push_back(parse_formula(ftext));
  if (c.oformulas.empty()) throw ParseError("no oformulas");
  c.undergroups = detail::parse_groups(under_text, c.size(), "under");
  c.overgroups = detail::parse_groups(over_text, c.size(), "over");
  return c;
}

inline std::string render_cirquent(const Cirquent& c) {
  std::string out = "oformulas: ";
  for (std::size_t a = 0; a < c.size(); ++a) {
    if (a) out += " | ";
    out += render_formula(c.oformulas[a]);
  }
  out += " ; under: " + detail::render_groups(c.undergroups);
  out += " ; over: " + detail::render_groups(c.overgroups);
  return out;
}

// Three-layer ASCII diagram: overgroups above the oformulas, undergroups
// below. Each group row marks its arcs with '*' and joins them with '-'.
//
//        O1   *----*
//        O2        *
//             |    |
//             E    F
//             |    |
//        U1   *----*
inline std::string render_diagram(const Cirquent& c) {
  std::vector<std::string> names;
  std::size_t width = 1;
  for (const auto& f : c.oformulas) {
    names.push_back(render_formula(f));
    width = std::max(width, names.back().size());
  }
  const std::size_t col = width + 2;
  const std::size_t label = 2 + std::to_string(std::max(c.undergroups.size(), c.overgroups.size())).size() + 2;
  auto group_row = [&](char tag, std::size_t i, const Group& g) {
    std::string row = std::string(1, tag) + std::to_string(i + 1);
    row.resize(label, ' ');
    std::string body(col * c.size(), ' ');
    if (!g.empty()) {
      const std::size_t lo = *g.begin() * col;
      const std::size_t hi = *g.rbegin() * col;
      for (std::size_t p = lo; p <= hi; ++p) body[p] = '-';
      for (std::size_t a : g) {
        if (a < c.size()) body[a * col] = '*';
      }
    }
    row += body;
    return row.substr(0, row.find_last_not_of(' ') + 1);
  };
  std::string stems(label, ' ');
  std::string formulas(label, ' ');
  for (std::size_t a = 0; a < c.size(); ++a) {
    std::string cell(col, ' ');
    cell[0] = '|';
    stems += cell;
    std::string fcell = names[a];
    fcell.resize(col, ' ');
    formulas += fcell;
  }
  auto rstrip = [](std::string s) { return s.substr(0, s.find_last_not_of(' ') + 1); };
  std::string out;
  for (std::size_t j = 0; j < c.overgroups.size(); ++j) out += group_row('O', j, c.overgroups[j]) + "\n";
  out += rstrip(stems) + "\n" + rstrip(formulas) + "\n" + rstrip(stems) + "\n";
  for (std::size_t i = 0; i < c.undergroups.size(); ++i) out += group_row('U', i, c.undergroups[i]) + "\n";
  return out;
}

}  // namespace cl15
