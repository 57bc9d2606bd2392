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

// Test oracles written independently of the library internals: a reference
// evaluator for the string theory, a brute-force minimum-size search without
// observational equivalence, exact integer layer sizing, and an exhaustive
// fallback-point search.

#ifndef GRT_TESTS_ORACLE_REFERENCE_HPP
#define GRT_TESTS_ORACLE_REFERENCE_HPP

#include "grt/core.hpp"
#include "grt/random.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace oracle {

/// Evaluates \p P by direct transcription of the SMT-LIB string theory
/// definitions, with integers clamped to the int64 range.
grt::Value refEval(const grt::ProgramAst &P,
                   const std::vector<std::string> &Inputs);

/// Random well-typed term of sort \p S over \p G, at most \p Depth deep.
grt::ProgramAst randomTerm(grt::Rng &R, const grt::Grammar &G, grt::Sort S,
                           int Depth);

/// Random term rooted at \p Root with random subterms.
grt::ProgramAst randomRooted(grt::Rng &R, const grt::Grammar &G,
                             const grt::TerminalSymbol &Root, int Depth);

/// Random string over a mix of letters, digits, separators and the odd
/// high byte.
std::string randomString(grt::Rng &R, std::size_t MaxLen);

/// Every term of sort \p S and exactly \p Size nodes over \p G.
std::vector<grt::ProgramAst> allTerms(const grt::Grammar &G, grt::Sort S,
                                      std::size_t Size);

/// Smallest size of a String term over \p G meeting every constraint,
/// searching sizes 1..MaxSize exhaustively.
std::optional<std::size_t>
bruteMinSize(const grt::Grammar &G,
             const std::vector<grt::IoConstraint> &Constraints,
             std::size_t MaxSize);

/// Hidden layer sizes from exact integer arithmetic: k is the largest
/// integer with (k - 1/2)^L <= In^(L-n) * Out^n, L = NumHidden + 3.
std::vector<std::size_t> exactLayerSizes(std::size_t In, std::size_t Out,
                                         std::size_t NumHidden);

/// Grid index with the least summed fallback cost, scanning every point.
std::size_t exhaustiveFallbackIndex(const std::vector<double> &StarSeconds,
                                    const std::vector<double> &FullSeconds,
                                    double Timeout,
                                    const std::vector<double> &Grid);

} // namespace oracle

#endif // GRT_TESTS_ORACLE_REFERENCE_HPP
