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

// cl15: check proofs, extract strategies, simulate plays, project runs, run
// the separation demo, or play as the environment.
//
// Exit codes: 0 success, 1 failed check / lost trial, 2 usage or I/O error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cl15/cl15.hpp"

namespace {

using namespace cl15;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

// A strategy file is a proof preceded by "extracted-strategy level=<lvl>".
struct StrategySource {
  Proof proof;
  bool formula_level = false;
};

StrategySource load_strategy(const std::string& path, bool force_formula) {
  std::string text = read_file(path);
  StrategySource src;
  std::istringstream in(text);
  std::string first;
  while (std::getline(in, first)) {
    if (!trim(first).empty() && trim(first)[0] != '#') break;
  }
  const std::string head = trim(first);
  if (head.rfind("extracted-strategy", 0) == 0) {
    if (head == "extracted-strategy level=formula") {
      src.formula_level = true;
    } else if (head != "extracted-strategy level=cirquent") {
      throw ParseError("unknown strategy header '" + head + "'");
    }
    text = text.substr(text.find(first) + first.size());
  }
  src.proof = parse_proof(text);
  src.formula_level = src.formula_level || force_formula;
  return src;
}

Game game_of(const StrategySource& src, const Interpretation& interp) {
  if (src.formula_level) {
    auto f = proved_formula(src.proof);
    if (!f) throw RuleError("proof does not end in a single-oformula cirquent");
    return interpret_formula(*f, interp);
  }
  return interpret_cirquent(src.proof.steps.back().cirquent, interp);
}

std::function<std::string(std::mt19937_64&)> move_generator(const StrategySource& src) {
  if (src.formula_level) {
    Formula f = *proved_formula(src.proof);
    return [f](std::mt19937_64& rng) { return random_formula_move(f, rng); };
  }
  Cirquent c = src.proof.steps.back().cirquent;
  return [c](std::mt19937_64& rng) { return random_cirquent_move(c, rng); };
}

// Builds the interpretation from --interp entries: "random", or
// ATOM=<finitegame file>, or ATOM=enum:<run file> (an enumeration game the
// environment loses exactly on that run).
Interpretation load_interpretation(const std::vector<std::string>& specs, const std::set<std::string>& atoms,
                                   std::uint64_t seed) {
  Interpretation interp;
  bool random = specs.empty();
  for (const auto& s : specs) {
    if (s == "random") {
      random = true;
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw UsageError("malformed --interp '" + s + "'");
    const std::string atom = s.substr(0, eq), target = s.substr(eq + 1);
    if (target.rfind("enum:", 0) == 0) {
      Run loser = parse_run(read_file(target.substr(5)));
      interp.insert_or_assign(atom, make_enumeration_game([loser](const Run& r) { return r == loser; }));
    } else {
      interp.insert_or_assign(atom, make_finite_game(parse_finite_game(read_file(target))));
    }
  }
  if (random) {
    std::set<std::string> missing;
    for (const auto& a : atoms) {
      if (!interp.count(a)) missing.insert(a);
    }
    for (auto& [a, g] : to_interpretation(random_finite_interpretation(missing, 2, 2, seed))) interp.emplace(a, g);
  }
  return interp;
}

std::set<std::string> atoms_of_source(const StrategySource& src) { return atoms_of(src.proof.steps.back().cirquent); }

int cmd_check(const std::string& path, const std::string& goal) {
  Proof proof = parse_proof(read_file(path));
  std::optional<Formula> g;
  if (!goal.empty()) g = parse_formula(goal);
  if (auto failure = verify_proof(proof, g)) {
    std::cout << "step " << failure->step << ": violation: " << failure->what << "\n";
    return 1;
  }
  std::cout << "ok (" << proof.steps.size() << " steps)\n";
  return 0;
}

int cmd_extract(const std::string& path, const std::string& out, bool formula) {
  Proof proof = parse_proof(read_file(path));
  if (auto failure = verify_proof(proof)) {
    std::cout << "step " << failure->step << ": violation: " << failure->what << "\n";
    return 1;
  }
  Strategy s = extract_solution(proof, formula);
  std::string text = std::string("extracted-strategy level=") + (formula ? "formula" : "cirquent") + "\n";
  text += "# " + s.describe() + "\n";
  text += render_proof(proof);
  write_file(out, text);
  std::cout << "wrote " << out << "\n";
  return 0;
}

std::unique_ptr<Environment> adversary_from(const std::string& spec, const Game& game,
                                            std::function<std::string(std::mt19937_64&)> gen, std::uint64_t seed) {
  if (spec == "silent") return std::make_unique<SilentEnvironment>();
  if (spec == "random") return make_adversary(AdversaryKind::kRandomLegal, game, std::move(gen), seed);
  if (spec == "scripted") return make_adversary(AdversaryKind::kScripted, game, std::move(gen), seed);
  if (spec.rfind("scripted:", 0) == 0) {
    std::vector<std::optional<std::string>> script;
    for (const auto& m : parse_run(read_file(spec.substr(9)))) {
      if (m.player != Player::kBot) throw UsageError("scripted adversary file may only contain B moves");
      script.push_back(m.move);
    }
    return std::make_unique<ScriptedEnvironment>(std::move(script));
  }
  throw UsageError("unknown adversary '" + spec + "'");
}

int cmd_simulate(const std::string& path, bool formula, const std::vector<std::string>& interp_specs,
                 const std::string& adversary, std::int64_t budget, std::uint64_t seed, int trials, bool trace) {
  StrategySource src = load_strategy(path, formula);
  Strategy s = extract_solution(src.proof, src.formula_level);
  std::vector<TrialReport> reports;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(t);
    Interpretation interp = load_interpretation(interp_specs, atoms_of_source(src), trial_seed);
    Game game = game_of(src, interp);
    auto env = adversary_from(adversary, game, move_generator(src), trial_seed);
    reports.push_back(run_trial(std::to_string(t + 1), trial_seed, s, game, *env, budget));
    if (trace) std::cout << reports.back().result.render_trace();
    for (const auto& d : reports.back().result.diagnostics) std::cout << d << "\n";
    std::cout << reports.back().line() << "\n";
  }
  std::cout << trial_summary(reports) << "\n";
  for (const auto& r : reports) {
    if (!r.pass) return 1;
  }
  return 0;
}

int cmd_project(const std::string& path, const std::string& prefix, const std::string& branch, std::uint64_t cell,
                const std::string& coords) {
  Run run = parse_run(read_file(path));
  const int chosen = !prefix.empty() + !branch.empty() + (cell != 0);
  if (chosen != 1) throw UsageError("choose exactly one of --prefix, --branch, --cell");
  Run out;
  if (!prefix.empty()) {
    out = project_prefix(run, prefix);
  } else if (!branch.empty()) {
    out = project_branch(run, InfiniteBitstring::parse(branch));
  } else {
    std::vector<std::uint64_t> xs;
    std::istringstream in(coords);
    std::string item;
    while (std::getline(in, item, ',')) {
      auto v = parse_positive(trim(item));
      if (!v) throw UsageError("--coords must be positive integers, got '" + item + "'");
      xs.push_back(*v);
    }
    out = project_cell(run, cell, std::span<const std::uint64_t>(xs));
  }
  std::cout << render_run(out);
  return 0;
}

int cmd_demo(const std::string& machine, std::size_t k, std::int64_t budget) {
  Strategy s = machine == "granter"    ? granter_strategy()
               : machine == "rotating" ? rotating_copycat_strategy()
                                       : throw UsageError("unknown machine '" + machine + "'");
  SeparationReport rep = separation_demo(s, k, budget);
  std::cout << rep.render();
  return rep.consistent() ? 0 : 1;
}

int cmd_play(const std::string& path, bool formula, const std::vector<std::string>& interp_specs,
             std::int64_t budget, std::uint64_t seed, const std::string& transcript) {
  StrategySource src = load_strategy(path, formula);
  Strategy s = extract_solution(src.proof, src.formula_level);
  Interpretation interp = load_interpretation(interp_specs, atoms_of_source(src), seed);
  Game game = game_of(src, interp);
  PlaySession session = play_session(s, game, budget, std::cin, std::cout);
  if (!transcript.empty()) write_file(transcript, render_run(session.result.run));
  return session.result.winner == Player::kTop ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cl15: proofs, games and strategies for the cirquent calculus CL15"};
  app.require_subcommand(1);

  std::string path, goal, out, prefix, branch, coords, adversary = "silent", machine = "granter", transcript;
  std::vector<std::string> interp;
  bool formula = false, trace = false;
  std::int64_t budget = 200;
  std::uint64_t seed = 1, cell = 0;
  std::size_t k = 8;
  int trials = 1;

  auto* check = app.add_subcommand("check", "verify a proof file");
  check->add_option("proof", path, "proof file")->required();
  check->add_option("--goal", goal, "formula the proof must end in");

  auto* extract = app.add_subcommand("extract", "extract a strategy from a proof");
  extract->add_option("proof", path, "proof file")->required();
  extract->add_option("-o,--out", out, "strategy file to write")->required();
  extract->add_flag("--formula", formula, "play the proved formula instead of its cirquent");

  auto* sim = app.add_subcommand("simulate", "play an extracted strategy against an adversary");
  sim->add_option("--strategy", path, "strategy or proof file")->required();
  sim->add_flag("--formula", formula, "play the proved formula instead of its cirquent");
  sim->add_option("--interp,--game", interp, "random | ATOM=<finitegame file> | ATOM=enum:<run file>");
  sim->add_option("--adversary", adversary, "silent | random | scripted | scripted:<run file>");
  sim->add_option("--budget", budget, "step budget")->check(CLI::PositiveNumber);
  sim->add_option("--seed", seed, "random seed");
  sim->add_option("--trials", trials, "number of trials")->check(CLI::PositiveNumber);
  sim->add_flag("--trace", trace, "print step traces");

  auto* project = app.add_subcommand("project", "project a run");
  project->add_option("run", path, "run file")->required();
  project->add_option("--prefix", prefix, "keep moves starting with this prefix and strip it");
  project->add_option("--branch", branch, "infinite bitstring stem:tail");
  project->add_option("--cell", cell, "oformula number")->check(CLI::PositiveNumber);
  project->add_option("--coords", coords, "comma-separated positive coordinates");

  auto* demo = app.add_subcommand("demo-separation", "bounded demo that !P -> b!P is not won by the machine");
  demo->add_option("--machine", machine, "granter | rotating");
  demo->add_option("--k", k, "loop iterations")->check(CLI::PositiveNumber);
  demo->add_option("--budget", budget, "step budget")->check(CLI::PositiveNumber);

  auto* play = app.add_subcommand("play", "play as the environment against an extracted strategy");
  play->add_option("proof", path, "proof or strategy file")->required();
  play->add_flag("--formula", formula, "play the proved formula instead of its cirquent");
  play->add_option("--interp", interp, "random | ATOM=<finitegame file> | ATOM=enum:<run file>");
  play->add_option("--budget", budget, "step budget")->check(CLI::PositiveNumber);
  play->add_option("--seed", seed, "random seed");
  play->add_option("--transcript", transcript, "write the final run to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*check) return cmd_check(path, goal);
    if (*extract) return cmd_extract(path, out, formula);
    if (*sim) return cmd_simulate(path, formula, interp, adversary, budget, seed, trials, trace);
    if (*project) return cmd_project(path, prefix, branch, cell, coords);
    if (*demo) return cmd_demo(machine, k, budget);
    if (*play) return cmd_play(path, formula, interp, budget, seed, transcript);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
