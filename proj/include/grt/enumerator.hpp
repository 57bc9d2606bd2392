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

// Bottom-up enumerative synthesis by AST size with observational-equivalence
// pruning. Candidates whose outputs on every example input coincide with an
// earlier (hence no larger) candidate are discarded, so the first program
// that matches all outputs has minimal size.

#ifndef GRT_ENUMERATOR_HPP
#define GRT_ENUMERATOR_HPP

#include "grt/core.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace grt {

struct SynthesisResult {
  enum class Outcome { Solved, Timeout };

  Outcome Status = Outcome::Timeout;
  std::optional<ProgramAst> Program;
  /// Wall time spent; equals the budget for a Timeout.
  double ElapsedSeconds = 0.0;
  std::uint64_t ProgramsExplored = 0;
  /// Set when the search stopped before the budget because the grammar has
  /// no further distinct programs or the bank hit its memory cap.
  bool StoppedEarly = false;

  bool solved() const { return Status == Outcome::Solved; }

  static SynthesisResult solvedWith(ProgramAst P, double Elapsed,
                                    std::uint64_t Explored = 0);
  static SynthesisResult timeout(double Budget, std::uint64_t Explored = 0);
};

struct EnumeratorConfig {
  /// Total programs kept across all sort banks before the search gives up.
  std::size_t MaxBankEntries = 3'000'000;
  /// Largest AST size considered.
  std::size_t MaxProgramSize = 40;
};

/// Solver signature shared by the enumerator, the external adapter and test
/// doubles: solve \p P within \p BudgetSeconds.
using SolveFn =
    std::function<SynthesisResult(const SygusProblem &P, double BudgetSeconds)>;

/// Solves \p P within P.TimeoutSeconds.
SynthesisResult solve(const SygusProblem &P, const EnumeratorConfig &Cfg = {});
SynthesisResult solve(const SygusProblem &P, double BudgetSeconds,
                      const EnumeratorConfig &Cfg = {});

/// SolveFn wrapping the built-in enumerator.
SolveFn enumerativeSolver(EnumeratorConfig Cfg = {});

/// The fixed probe strings used for observational equivalence when there
/// are no constraints.
const std::vector<std::string> &streamProbeInputs();

/// Enumerates \p N observationally distinct String-valued programs of \p G
/// in nondecreasing size. Throws GrammarExhausted if fewer exist.
std::vector<ProgramAst> stream(const Grammar &G, std::size_t N,
                               const EnumeratorConfig &Cfg = {});

} // namespace grt

#endif // GRT_ENUMERATOR_HPP
