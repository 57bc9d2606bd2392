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

// Grammar reduction: measured time savings nominate up to three terminals,
// criticality votes keep the most-voted one, and a fallback switch point
// bounds the cost of a wrong guess.

#ifndef GRT_PRUNER_HPP
#define GRT_PRUNER_HPP

#include "grt/core.hpp"
#include "grt/datagen.hpp"
#include "grt/enumerator.hpp"
#include "grt/neural.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace grt {

struct SavingsEntry {
  /// Mean of (t_full - t_dropped), in seconds. Capped times are included.
  double Mean = 0.0;
  std::size_t Samples = 0;
  std::size_t FullTimedOut = 0;
  std::size_t DroppedTimedOut = 0;

  bool removable() const { return Mean > 0.0; }
};

struct SavingsTable {
  std::map<std::string, SavingsEntry> Entries;

  const SavingsEntry *find(const std::string &Terminal) const;
};

SavingsTable savings(std::span<const TimeSample> Samples);

struct VoteVector {
  /// Model output order.
  std::vector<std::string> Terminals;
  std::vector<std::size_t> Counts;
  std::size_t NumConstraints = 0;

  std::optional<std::size_t> count(const std::string &Terminal) const;
};

/// Sums predictBits over \p Constraints.
VoteVector vote(const ModelWeights &W, std::span<const IoConstraint> Constraints,
                double Threshold = 0.5);

struct PruneDecision {
  std::vector<std::string> Removed;
  /// Top terminals by positive saving, best first.
  std::vector<std::string> Candidates;
  std::vector<double> CandidateSavings;
  VoteVector Votes;
  Grammar Reduced;
};

/// Removes the two least-voted of the (up to three) terminals of \p G with
/// the largest positive saving. Savings ties and vote ties go to name order.
/// Terminals the model has no output for count as voted by every
/// constraint.
PruneDecision decide(const Grammar &G, const SavingsTable &Table,
                     const VoteVector &Votes, std::size_t NumCandidates = 3,
                     std::size_t NumRemoved = 2);

/// Ablation without savings: removes the \p NumRemoved least-voted
/// terminals of \p G.
PruneDecision decideCriticalityOnly(const Grammar &G, const VoteVector &Votes,
                                    std::size_t NumRemoved = 2);

struct FallbackRun {
  /// Time with the reduced grammar; infinity when it never solves.
  double StarSeconds = 0.0;
  /// Time with the full grammar; infinity when it never solves.
  double FullSeconds = 0.0;
};

/// Summed cost over \p Runs of switching to the full grammar after \p X
/// seconds: t* when t* < x, else min(x + t_full, timeout).
double fallbackCost(std::span<const FallbackRun> Runs, double Timeout,
                    double X);

/// Grid point with the least fallbackCost; ties go to the smaller x.
double fallbackPoint(std::span<const FallbackRun> Runs, double Timeout,
                     std::span<const double> Grid);

/// {1, 2, 5, 10, 20, 30, 60, 120, 300, 600} seconds.
const std::vector<double> &defaultFallbackGrid();

/// Solves with \p Reduced for \p X seconds, then with the problem's own
/// grammar for the remainder of P.TimeoutSeconds. X >= P.TimeoutSeconds
/// disables the fallback. \p UsedFallback, when given, reports whether the
/// second phase ran.
SynthesisResult runWithFallback(const SygusProblem &P, const Grammar &Reduced,
                                double X, const SolveFn &Solver,
                                bool *UsedFallback = nullptr);

} // namespace grt

#endif // GRT_PRUNER_HPP
