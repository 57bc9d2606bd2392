// Copyright 2026 The GRT Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// FlashFill-style benchmark generator: formatted records (phone numbers,
// names, dates, product codes) paired with a known transformation program.

#ifndef GRT_SUITE_GEN_HPP
#define GRT_SUITE_GEN_HPP

#include "grt/core.hpp"
#include "grt/random.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace grt {

struct GeneratedProblem {
  NamedProblem Named;
  /// A program in the problem grammar meeting every constraint.
  ProgramAst Solution;
  std::string Family;
};

/// Record shapes the inputs are drawn from.
enum class RecordKind { Phone, Name, Date, Code };

std::string randomRecord(Rng &R, RecordKind K);

/// Transformation templates, as SMT-LIB terms over x0. "SEP" is replaced
/// with a separator literal of the grammar.
const std::vector<std::string> &suiteTemplates();

struct SuiteConfig {
  std::size_t Count = 40;
  std::size_t ExamplesPerProblem = 5;
  std::uint64_t Seed = 1;
  std::string IdPrefix = "gen";
};

/// Draws \p Cfg.Count problems over \p G. Candidates whose examples a
/// variable or literal already satisfies, or whose examples collide, are
/// redrawn.
std::vector<GeneratedProblem> generateSuite(const Grammar &G,
                                            const SuiteConfig &Cfg);

/// Renders a problem with its known solution as a leading comment.
std::string printGeneratedProblem(const GeneratedProblem &P);

} // namespace grt

#endif // GRT_SUITE_GEN_HPP
