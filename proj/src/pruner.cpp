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

#include "grt/pruner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

namespace grt {

const SavingsEntry *SavingsTable::find(const std::string &Terminal) const {
  auto It = Entries.find(Terminal);
  return It == Entries.end() ? nullptr : &It->second;
}

SavingsTable savings(std::span<const TimeSample> Samples) {
  // Sum in a fixed order so the mean does not depend on sample order.
  std::map<std::string, std::vector<double>> Deltas;
  SavingsTable T;
  for (const TimeSample &S : Samples) {
    Deltas[S.Terminal].push_back(S.DeltaSeconds);
    SavingsEntry &E = T.Entries[S.Terminal];
    ++E.Samples;
    E.FullTimedOut += S.FullTimedOut;
    E.DroppedTimedOut += S.DroppedTimedOut;
  }
  for (auto &[Name, Ds] : Deltas) {
    std::sort(Ds.begin(), Ds.end());
    double Sum = 0.0;
    for (double D : Ds)
      Sum += D;
    T.Entries[Name].Mean = Sum / static_cast<double>(Ds.size());
  }
  return T;
}

std::optional<std::size_t> VoteVector::count(const std::string &Terminal) const {
  for (std::size_t I = 0; I < Terminals.size(); ++I)
    if (Terminals[I] == Terminal)
      return Counts[I];
  return std::nullopt;
}

VoteVector vote(const ModelWeights &W, std::span<const IoConstraint> Constraints,
                double Threshold) {
  VoteVector V;
  V.Terminals = W.Terminals;
  V.Counts.assign(W.numOutputs(), 0);
  V.NumConstraints = Constraints.size();
  for (const IoConstraint &C : Constraints) {
    std::vector<std::uint8_t> Bits = predictBits(W, C, Threshold);
    for (std::size_t I = 0; I < Bits.size(); ++I)
      V.Counts[I] += Bits[I];
  }
  return V;
}

namespace {

std::size_t votesFor(const VoteVector &V, const std::string &Terminal) {
  return V.count(Terminal).value_or(V.NumConstraints + 1);
}

// The \p N entries of \p Names with the fewest votes, ties by name.
std::vector<std::string> leastVoted(std::vector<std::string> Names,
                                    const VoteVector &V, std::size_t N) {
  std::sort(Names.begin(), Names.end(),
            [&](const std::string &A, const std::string &B) {
              return std::make_tuple(votesFor(V, A), std::cref(A)) <
                     std::make_tuple(votesFor(V, B), std::cref(B));
            });
  Names.resize(std::min(N, Names.size()));
  return Names;
}

Grammar without(const Grammar &G, const std::vector<std::string> &Names) {
  Grammar R = G;
  for (const std::string &N : Names)
    R = R.dropTerminal(N);
  return R;
}

} // namespace

PruneDecision decide(const Grammar &G, const SavingsTable &Table,
                     const VoteVector &Votes, std::size_t NumCandidates,
                     std::size_t NumRemoved) {
  std::vector<std::pair<std::string, double>> Positive;
  for (const std::string &Name : G.terminalNames())
    if (const SavingsEntry *E = Table.find(Name); E && E->removable())
      Positive.emplace_back(Name, E->Mean);
  std::sort(Positive.begin(), Positive.end(), [](const auto &A, const auto &B) {
    if (A.second != B.second)
      return A.second > B.second;
    return A.first < B.first;
  });
  if (Positive.size() > NumCandidates)
    Positive.resize(NumCandidates);

  PruneDecision D;
  D.Votes = Votes;
  for (const auto &[Name, Mean] : Positive) {
    D.Candidates.push_back(Name);
    D.CandidateSavings.push_back(Mean);
  }
  D.Removed = leastVoted(D.Candidates, Votes, NumRemoved);
  std::sort(D.Removed.begin(), D.Removed.end());
  D.Reduced = without(G, D.Removed);
  return D;
}

PruneDecision decideCriticalityOnly(const Grammar &G, const VoteVector &Votes,
                                    std::size_t NumRemoved) {
  PruneDecision D;
  D.Votes = Votes;
  D.Removed = leastVoted(G.terminalNames(), Votes, NumRemoved);
  std::sort(D.Removed.begin(), D.Removed.end());
  D.Reduced = without(G, D.Removed);
  return D;
}

double fallbackCost(std::span<const FallbackRun> Runs, double Timeout,
                    double X) {
  double Cost = 0.0;
  for (const FallbackRun &R : Runs)
    Cost += R.StarSeconds < X ? R.StarSeconds
                              : std::min(X + R.FullSeconds, Timeout);
  return Cost;
}

double fallbackPoint(std::span<const FallbackRun> Runs, double Timeout,
                     std::span<const double> Grid) {
  if (Grid.empty())
    throw Error("fallbackPoint: empty grid");
  std::vector<double> Sorted(Grid.begin(), Grid.end());
  std::sort(Sorted.begin(), Sorted.end());
  double Best = Sorted.front();
  double BestCost = fallbackCost(Runs, Timeout, Best);
  for (double X : Sorted) {
    double C = fallbackCost(Runs, Timeout, X);
    if (C < BestCost) {
      Best = X;
      BestCost = C;
    }
  }
  return Best;
}

const std::vector<double> &defaultFallbackGrid() {
  static const std::vector<double> Grid{1, 2, 5, 10, 20, 30, 60, 120, 300, 600};
  return Grid;
}

SynthesisResult runWithFallback(const SygusProblem &P, const Grammar &Reduced,
                                double X, const SolveFn &Solver,
                                bool *UsedFallback) {
  if (UsedFallback)
    *UsedFallback = false;
  const double Timeout = P.TimeoutSeconds;
  if (Reduced == P.TheGrammar)
    return Solver(P, Timeout);
  SygusProblem Small = P;
  Small.TheGrammar = Reduced;
  double First = std::min(X, Timeout);
  SynthesisResult R1 = Solver(Small, First);
  if (R1.solved())
    return R1;

  double Spent = std::min(R1.ElapsedSeconds, First);
  double Left = Timeout - Spent;
  if (Left <= 0.0) {
    SynthesisResult T = SynthesisResult::timeout(Timeout, R1.ProgramsExplored);
    return T;
  }
  if (UsedFallback)
    *UsedFallback = true;
  SynthesisResult R2 = Solver(P, Left);
  R2.ProgramsExplored += R1.ProgramsExplored;
  if (R2.solved()) {
    R2.ElapsedSeconds = std::min(Spent + R2.ElapsedSeconds, Timeout);
    return R2;
  }
  SynthesisResult T = SynthesisResult::timeout(Timeout, R2.ProgramsExplored);
  T.StoppedEarly = R2.StoppedEarly;
  if (T.StoppedEarly)
    T.ElapsedSeconds = std::min(Spent + R2.ElapsedSeconds, Timeout);
  return T;
}

} // namespace grt
