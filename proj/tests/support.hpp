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

// Shared helpers for the test suites: fixture access and random instances.

#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cl15/cl15.hpp"

namespace testing_support {

using namespace cl15;

inline std::string fixture_path(const std::string& name) { return std::string(CL15_FIXTURES) + "/" + name; }

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline Proof load_proof(const std::string& name) { return parse_proof(read_fixture(name)); }

inline std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Random NNF formula over the given atoms with depth <= depth.
inline Formula random_formula(std::mt19937_64& rng, std::size_t depth, const std::vector<std::string>& atoms,
                              bool branching = true) {
  if (depth == 0 || pick(rng, 0, 3) == 0) {
    const std::string& a = atoms[pick(rng, 0, atoms.size() - 1)];
    return pick(rng, 0, 1) ? Formula::atom(a) : Formula::neg_atom(a);
  }
  const std::size_t ops = branching ? 5 : 3;
  switch (pick(rng, 0, ops)) {
    case 0: return Formula::conj(random_formula(rng, depth - 1, atoms, branching), random_formula(rng, depth - 1, atoms, branching));
    case 1: return Formula::disj(random_formula(rng, depth - 1, atoms, branching), random_formula(rng, depth - 1, atoms, branching));
    case 2: return Formula::pst(random_formula(rng, depth - 1, atoms, branching));
    case 3: return Formula::pcost(random_formula(rng, depth - 1, atoms, branching));
    case 4: return Formula::st(random_formula(rng, depth - 1, atoms, branching));
    default: return Formula::cost(random_formula(rng, depth - 1, atoms, branching));
  }
}

// Random valid cirquent with 1..max_k oformulas.
inline Cirquent random_cirquent(std::mt19937_64& rng, std::size_t max_k, std::size_t depth,
                                const std::vector<std::string>& atoms, std::size_t max_groups = 3) {
  Cirquent c;
  const std::size_t k = pick(rng, 1, max_k);
  for (std::size_t a = 0; a < k; ++a) c.oformulas.push_back(random_formula(rng, depth, atoms));
  auto groups = [&](std::vector<Group>& out) {
    const std::size_t n = pick(rng, 1, max_groups);
    for (std::size_t i = 0; i < n; ++i) {
      Group g;
      for (std::size_t a = 0; a < k; ++a) {
        if (pick(rng, 0, 1)) g.insert(a);
      }
      if (g.empty()) g.insert(pick(rng, 0, k - 1));
      out.push_back(g);
    }
    for (std::size_t a = 0; a < k; ++a) {
      bool covered = false;
      for (const auto& g : out) covered = covered || g.count(a);
      if (!covered) out[pick(rng, 0, out.size() - 1)].insert(a);
    }
  };
  groups(c.undergroups);
  groups(c.overgroups);
  return c;
}

// Random run of up to max_len labmoves: with probability 3/4 a step keeps
// the run legal (when such a move is found quickly), otherwise any shaped
// move, occasionally a malformed one.
inline Run random_run(std::mt19937_64& rng, const Game& game, const std::function<std::string(std::mt19937_64&)>& gen,
                      std::size_t max_len) {
  Run run;
  const std::size_t len = pick(rng, 0, max_len);
  for (std::size_t i = 0; i < len; ++i) {
    const Player p = pick(rng, 0, 1) ? Player::kTop : Player::kBot;
    std::string m = gen(rng);
    if (pick(rng, 0, 3) != 0) {
      for (int t = 0; t < 12; ++t) {
        if (game.legal(concat(run, {{p, m}}))) break;
        m = gen(rng);
      }
    } else if (pick(rng, 0, 5) == 0) {
      m = "junk";
    }
    run.push_back({p, m});
  }
  return run;
}

// Every single-step corruption of c: one arc toggled, one group deleted or
// doubled, two adjacent groups swapped, or one oformula replaced. Results equal to c are skipped.
inline std::vector<Cirquent> mutations(const Cirquent& c) {
  std::vector<Cirquent> out;
  auto keep = [&](Cirquent m) {
    if (!(m == c)) out.push_back(std::move(m));
  };
  for (int layer = 0; layer < 2; ++layer) {
    const auto& groups = layer == 0 ? c.undergroups : c.overgroups;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      for (std::size_t a = 0; a < c.size(); ++a) {
        Cirquent m = c;
        auto& g = (layer == 0 ? m.undergroups : m.overgroups)[i];
        if (g.count(a)) {
          g.erase(a);
        } else {
          g.insert(a);
        }
        keep(std::move(m));
      }
      {
        Cirquent m = c;
        auto& gs = layer == 0 ? m.undergroups : m.overgroups;
        gs.erase(gs.begin() + static_cast<std::ptrdiff_t>(i));
        keep(std::move(m));
      }
      {
        Cirquent m = c;
        auto& gs = layer == 0 ? m.undergroups : m.overgroups;
        gs.insert(gs.begin() + static_cast<std::ptrdiff_t>(i), gs[i]);
        keep(std::move(m));
      }
      if (i + 1 < groups.size()) {
        Cirquent m = c;
        auto& gs = layer == 0 ? m.undergroups : m.overgroups;
        std::swap(gs[i], gs[i + 1]);
        keep(std::move(m));
      }
    }
  }
  for (std::size_t a = 0; a < c.size(); ++a) {
    for (const Formula& f : {dual(c.oformulas[a]), Formula::atom("Z"), Formula::neg_atom("Z"), Formula::pst(c.oformulas[a]),
                             Formula::pcost(c.oformulas[a])}) {
      Cirquent m = c;
      m.oformulas[a] = f;
      keep(std::move(m));
    }
  }
  return out;
}

}  // namespace testing_support
