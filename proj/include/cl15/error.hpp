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

#include <stdexcept>
#include <string>

namespace cl15 {

// Malformed textual input (formulas, runs, cirquents, proofs, games).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A structurally well-formed value that violates a semantic precondition,
// e.g. an interpretation that misses an atom.
class SemanticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A rule instance whose parameters do not fit the cirquents it is applied to.
class RuleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cl15
