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

#include "cl15/cirquent.hpp"
#include "cl15/error.hpp"
#include "cl15/formula.hpp"
#include "cl15/games.hpp"
#include "cl15/harness.hpp"
#include "cl15/play.hpp"
#include "cl15/rules.hpp"
#include "cl15/runs.hpp"
#include "cl15/strategy.hpp"
