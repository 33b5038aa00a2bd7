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

// One worked premise/conclusion pair per rule, transcribed from the
// standard rule diagrams. E, F, G, H are atoms here.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cl15/rules.hpp"

namespace illustrations {

using namespace cl15;

struct Illustration {
  std::string name;
  std::optional<Cirquent> premise;  // none for the axiom
  Cirquent conclusion;
  RuleInstance rule;
};

inline std::vector<Illustration> all() {
  auto c = [](const char* t) { return parse_cirquent(t); };
  std::vector<Illustration> v;
  v.push_back({"axiom", std::nullopt, axiom_cirquent({Formula::atom("F1"), Formula::atom("F2")}),
               rule::Axiom{{Formula::atom("F1"), Formula::atom("F2")}}});
  v.push_back({"exchange", c("oformulas: E | F | G ; under: {1,2}{2}{3} ; over: {1}{2,3}"),
               c("oformulas: F | E | G ; under: {1,2}{1}{3} ; over: {2}{1,3}"), rule::OformulaExchange{1}});
  v.push_back({"duplication", c("oformulas: E | F | G ; under: {1,2}{3} ; over: {1}{2,3}"),
               c("oformulas: E | F | G ; under: {1,2}{1,2}{3} ; over: {1}{2,3}"), rule::UndergroupDuplication{1}});
  v.push_back({"merging", c("oformulas: E | F | E ; under: {1}{2}{3} ; over: {1}{2,3}"),
               c("oformulas: E | F | E ; under: {1}{2}{3} ; over: {1,2,3}"), rule::Merging{1}});
  v.push_back({"weakening", c("oformulas: G | F | F ; under: {1}{2}{3} ; over: {1,2}{2,3}"),
               c("oformulas: G | F | F ; under: {1,2}{2}{3} ; over: {1,2}{2,3}"), rule::Weakening{1, 2}});
  v.push_back({"contraction", c("oformulas: E | ?F | ?F | G ; under: {1,2,3}{2,3,4} ; over: {1}{2,3,4}{4}"),
               c("oformulas: E | ?F | G ; under: {1,2}{2,3} ; over: {1}{2,3}{3}"), rule::Contraction{2}});
  v.push_back({"or", c("oformulas: E | E | F ; under: {1}{2,3}{2,3} ; over: {1,2,3}{2,3}"),
               c("oformulas: E | E \\/ F ; under: {1}{2}{2} ; over: {1,2}{2}"), rule::OrIntro{2}});
  v.push_back({"and", c("oformulas: G | E | F ; under: {1}{1,2}{1,3} ; over: {1}{2,3}"),
               c("oformulas: G | E /\\ F ; under: {1}{1,2} ; over: {1}{2}"), rule::AndIntro{2}});
  v.push_back({"pst", c("oformulas: H | E | F ; under: {1,2}{2}{3} ; over: {1,2}{2,3}{3}"),
               c("oformulas: H | E | !F ; under: {1,2}{2}{3} ; over: {1,2}{2,3}"), rule::PstIntro{3}});
  v.push_back({"pcost", c("oformulas: H | E | F ; under: {1,2}{2}{3} ; over: {1,2,3}{2,3}{3}"),
               c("oformulas: H | E | ?F ; under: {1,2}{2}{3} ; over: {1,2}{2,3}{3}"), rule::PcostIntro{3, {1}}});
  return v;
}

}  // namespace illustrations
