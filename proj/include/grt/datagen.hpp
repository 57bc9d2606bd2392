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

// Training data: per-constraint criticality samples drawn from streamed
// programs, and per-terminal timing deltas from ablation runs.

#ifndef GRT_DATAGEN_HPP
#define GRT_DATAGEN_HPP

#include "grt/core.hpp"
#include "grt/enumerator.hpp"
#include "grt/random.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace grt {

/// One constraint fabricated from a streamed program. Label bit i is set
/// iff terminal i of the generating grammar (canonical order) occurs in the
/// program.
struct CritSample {
  IoConstraint Constraint;
  std::vector<std::uint8_t> Label;
  std::string ProgramId;
  /// SMT-LIB text of the generating program.
  std::string Program;

  bool operator==(const CritSample &) const = default;
};

struct TimeSample {
  std::string Terminal;
  std::string ProblemId;
  double FullSeconds = 0.0;
  double DroppedSeconds = 0.0;
  double DeltaSeconds = 0.0;
  bool FullTimedOut = false;
  bool DroppedTimedOut = false;

  bool operator==(const TimeSample &) const = default;
};

/// Lowercase letters, digits, space, '-' and '.'.
std::string_view defaultInputAlphabet();

/// Uniform length in [MinLen, MaxLen], characters i.i.d. from \p Alphabet.
std::string randomInput(Rng &R, std::size_t MinLen, std::size_t MaxLen,
                        std::string_view Alphabet = defaultInputAlphabet());

struct CritConfig {
  std::size_t NumPrograms = 4000;
  std::size_t InputsPerProgram = 5;
  /// Drives the sample order only.
  std::uint64_t ShuffleSeed = 0;
  /// Drives the random inputs. Kept apart from the shuffle seed so that the
  /// sample multiset does not depend on the order.
  std::uint64_t InputSeed = 0x5eed;
  std::size_t MinInputLength = 0;
  std::size_t MaxInputLength = 12;
  std::string Alphabet{defaultInputAlphabet()};
  EnumeratorConfig Enumerator;
};

std::vector<CritSample> genCritDataset(const Grammar &G,
                                       const CritConfig &Cfg);
std::vector<CritSample> genCritDataset(const Grammar &G,
                                       std::size_t NumPrograms,
                                       std::size_t InputsPerProgram,
                                       std::uint64_t Seed);

/// Regroups samples by generating program into PBE problems over \p G,
/// picking \p Count programs that use at least one terminal, uniformly by
/// seed. Problems are ordered by id.
std::vector<NamedProblem>
problemsFromCritDataset(const std::vector<CritSample> &Samples,
                        const Grammar &G, std::size_t Count,
                        std::uint64_t Seed);

struct TimeConfig {
  /// Runs per measurement; the median is kept. Repeats stop after the first
  /// run that does not solve, since further runs would time out as well.
  std::size_t Repeats = 3;
  std::function<void(const std::string &ProblemId, const std::string &Terminal,
                     const TimeSample &)>
      OnSample;
};

/// For every problem and every terminal of its grammar, times the solver on
/// the full grammar and on the grammar without that terminal. Unsolved runs
/// are recorded at \p BudgetSeconds.
std::vector<TimeSample> genTimeDataset(const std::vector<NamedProblem> &Problems,
                                       const SolveFn &Solver,
                                       double BudgetSeconds,
                                       const TimeConfig &Cfg = {});

/// Median time of up to \p Repeats runs, with timeouts at the budget.
struct TimedRun {
  double Seconds = 0.0;
  bool TimedOut = false;
  std::optional<ProgramAst> Program;
};
TimedRun timeSolver(const SolveFn &Solver, const SygusProblem &P,
                    double BudgetSeconds, std::size_t Repeats);

} // namespace grt

#endif // GRT_DATAGEN_HPP
