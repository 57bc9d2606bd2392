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
#include "oracle/reference.hpp"

#include "gtest/gtest.h"

#include <algorithm>
#include <cmath>
#include <limits>

using namespace grt;

namespace {

constexpr double Inf = std::numeric_limits<double>::infinity();

TimeSample delta(const std::string &Terminal, double D) {
  return {Terminal, "p", 10.0, 10.0 - D, D, false, false};
}

VoteVector votesFor(const Grammar &G,
                    std::vector<std::pair<std::string, std::size_t>> Counts,
                    std::size_t NumConstraints = 5) {
  VoteVector V;
  V.Terminals = G.terminalNames();
  V.Counts.assign(V.Terminals.size(), 0);
  V.NumConstraints = NumConstraints;
  for (auto &[Name, N] : Counts)
    V.Counts[*G.terminalIndex(Name)] = N;
  return V;
}

// Solver double: solves in Fast seconds unless Needed is missing, in which
// case it needs the whole budget and fails.
SolveFn needing(std::string Needed, double Fast) {
  return [Needed, Fast](const SygusProblem &P, double Budget) {
    if (!P.TheGrammar.hasTerminal(Needed) || Fast > Budget)
      return SynthesisResult::timeout(Budget);
    return SynthesisResult::solvedWith(ProgramAst::var("x0", 0), Fast);
  };
}

SygusProblem someProblem(double Timeout) {
  SygusProblem P;
  P.TheGrammar = defaultGrammar();
  P.Constraints = {{{"a"}, "a"}};
  P.TimeoutSeconds = Timeout;
  return P;
}

} // namespace

TEST(SavingsTest, WorkedExamples) {
  std::vector<TimeSample> Rows = {delta("str.at", 2), delta("str.at", 4),
                                  delta("ite", 1), delta("ite", -5),
                                  delta("+", 0.25)};
  SavingsTable T = savings(Rows);
  EXPECT_DOUBLE_EQ(T.find("str.at")->Mean, 3.0);
  EXPECT_TRUE(T.find("str.at")->removable());
  EXPECT_DOUBLE_EQ(T.find("ite")->Mean, -2.0);
  EXPECT_FALSE(T.find("ite")->removable());
  EXPECT_DOUBLE_EQ(T.find("+")->Mean, 0.25);
  EXPECT_EQ(T.find("+")->Samples, 1u);
  EXPECT_EQ(T.find("="), nullptr);
}

TEST(SavingsTest, OrderFree) {
  Rng R(1);
  std::vector<TimeSample> Rows;
  for (int I = 0; I < 50; ++I)
    Rows.push_back(delta(I % 2 ? "str.at" : "ite", R.uniform() * 10 - 5));
  SavingsTable A = savings(Rows);
  std::reverse(Rows.begin(), Rows.end());
  SavingsTable B = savings(Rows);
  EXPECT_EQ(A.find("str.at")->Mean, B.find("str.at")->Mean);
  EXPECT_EQ(A.find("ite")->Mean, B.find("ite")->Mean);
}

TEST(VoteTest, SumsBits) {
  ModelWeights W = initWeights(defaultGrammar().terminalNames(), 3);
  IoConstraint C{{"abc-def"}, "def"};
  std::vector<IoConstraint> One{C};
  VoteVector V1 = vote(W, One);
  auto Bits = predictBits(W, C);
  for (std::size_t I = 0; I < Bits.size(); ++I)
    EXPECT_EQ(V1.Counts[I], Bits[I]);

  std::vector<IoConstraint> Many{C, {{"x"}, "y"}, {{"12"}, "3"}};
  std::vector<IoConstraint> Doubled = Many;
  Doubled.insert(Doubled.end(), Many.begin(), Many.end());
  VoteVector V = vote(W, Many), D = vote(W, Doubled);
  for (std::size_t I = 0; I < V.Counts.size(); ++I) {
    EXPECT_EQ(D.Counts[I], 2 * V.Counts[I]);
    EXPECT_LE(V.Counts[I], Many.size());
  }
  std::reverse(Many.begin(), Many.end());
  EXPECT_EQ(vote(W, Many).Counts, V.Counts);
}

TEST(DecideTest, RemovesTwoLeastVoted) {
  Grammar G = defaultGrammar();
  SavingsTable T = savings(std::vector<TimeSample>{
      delta("str.at", 3), delta("ite", 2), delta("+", 1), delta("-", 0.5)});
  PruneDecision D =
      decide(G, T, votesFor(G, {{"str.at", 5}, {"ite", 0}, {"+", 1}}));
  EXPECT_EQ(D.Candidates, (std::vector<std::string>{"str.at", "ite", "+"}));
  EXPECT_EQ(D.Removed, (std::vector<std::string>{"+", "ite"}));
  EXPECT_EQ(D.Reduced, G.dropTerminal("ite").dropTerminal("+"));
}

TEST(DecideTest, CandidateShortage) {
  Grammar G = defaultGrammar();
  SavingsTable One = savings(std::vector<TimeSample>{delta("str.at", 3),
                                                     delta("ite", -1)});
  PruneDecision D = decide(G, One, votesFor(G, {}));
  EXPECT_EQ(D.Removed, std::vector<std::string>{"str.at"});

  SavingsTable None = savings(std::vector<TimeSample>{delta("ite", -1)});
  PruneDecision E = decide(G, None, votesFor(G, {}));
  EXPECT_TRUE(E.Removed.empty());
  EXPECT_EQ(E.Reduced, G);
}

TEST(DecideTest, SubsetLawOnRandomInputs) {
  Grammar G = defaultGrammar();
  auto Names = G.terminalNames();
  Rng R(8);
  for (int Trial = 0; Trial < 200; ++Trial) {
    std::vector<TimeSample> Rows;
    for (const std::string &N : Names)
      if (R.below(3))
        Rows.push_back(delta(N, R.uniform() * 4 - 2));
    std::vector<std::pair<std::string, std::size_t>> Votes;
    for (const std::string &N : Names)
      Votes.push_back({N, R.below(6)});
    PruneDecision D = decide(G, savings(Rows), votesFor(G, Votes));
    EXPECT_LE(D.Removed.size(), 2u);
    EXPECT_LE(D.Candidates.size(), 3u);
    Grammar Want = G;
    for (const std::string &N : D.Removed) {
      EXPECT_NE(std::find(D.Candidates.begin(), D.Candidates.end(), N),
                D.Candidates.end());
      Want = Want.dropTerminal(N);
    }
    EXPECT_EQ(D.Reduced, Want);

    std::reverse(Rows.begin(), Rows.end());
    EXPECT_EQ(decide(G, savings(Rows), votesFor(G, Votes)).Removed, D.Removed);
  }
}

TEST(DecideCriticalityOnlyTest, LeastVotedOverall) {
  Grammar G = defaultGrammar();
  std::vector<std::pair<std::string, std::size_t>> Votes;
  for (const std::string &N : G.terminalNames())
    Votes.push_back({N, 3});
  Votes[4].second = 0;  // str.len
  Votes[9].second = 1;  // str.suffixof
  Votes[12].second = 1; // +
  PruneDecision D = decideCriticalityOnly(G, votesFor(G, Votes));
  EXPECT_EQ(D.Removed, (std::vector<std::string>{"+", "str.len"}));
}

TEST(FallbackPointTest, WorkedExamples) {
  std::vector<FallbackRun> Fast = {{1, 9}, {2, 9}, {3, 9}};
  std::vector<double> Ten = {10};
  EXPECT_DOUBLE_EQ(fallbackCost(Fast, 100, 10), 6.0);
  EXPECT_DOUBLE_EQ(fallbackPoint(Fast, 100, Ten), 10.0);

  std::vector<FallbackRun> Never = {{Inf, 5}};
  EXPECT_DOUBLE_EQ(fallbackCost(Never, 100, 20), 25.0);
  EXPECT_DOUBLE_EQ(fallbackCost(Never, 100, 99), 100.0);
  EXPECT_DOUBLE_EQ(fallbackPoint(Never, 100, defaultFallbackGrid()), 1.0);
}

TEST(FallbackPointTest, MatchesExhaustiveSearch) {
  Rng R(30);
  const auto &Grid = defaultFallbackGrid();
  for (int Trial = 0; Trial < 100; ++Trial) {
    std::vector<FallbackRun> Runs;
    std::vector<double> Star, Full;
    for (int I = 0; I < 5; ++I) {
      double S = R.below(4) == 0 ? Inf : R.uniform() * 200;
      double F = R.below(8) == 0 ? Inf : R.uniform() * 200;
      Runs.push_back({S, F});
      Star.push_back(S);
      Full.push_back(F);
    }
    double X = fallbackPoint(Runs, 300, Grid);
    EXPECT_EQ(X, Grid[oracle::exhaustiveFallbackIndex(Star, Full, 300, Grid)]);
    for (double Y : Grid)
      EXPECT_LE(fallbackCost(Runs, 300, X), fallbackCost(Runs, 300, Y));
  }
}

TEST(RunWithFallbackTest, ReducedSolvesFirst) {
  SygusProblem P = someProblem(100);
  Grammar Reduced = P.TheGrammar.dropTerminal("ite");
  bool Used = true;
  SynthesisResult R = runWithFallback(P, Reduced, 10, needing("str.at", 2), &Used);
  ASSERT_TRUE(R.solved());
  EXPECT_DOUBLE_EQ(R.ElapsedSeconds, 2.0);
  EXPECT_FALSE(Used);
}

TEST(RunWithFallbackTest, FallsBackWhenCriticalRemoved) {
  SygusProblem P = someProblem(100);
  Grammar Reduced = P.TheGrammar.dropTerminal("str.at");
  bool Used = false;
  SynthesisResult R = runWithFallback(P, Reduced, 10, needing("str.at", 2), &Used);
  ASSERT_TRUE(R.solved());
  EXPECT_NEAR(R.ElapsedSeconds, 12.0, 1e-9);
  EXPECT_TRUE(Used);
}

TEST(RunWithFallbackTest, NeitherSolves) {
  SygusProblem P = someProblem(100);
  Grammar Reduced = P.TheGrammar.dropTerminal("str.at");
  SynthesisResult R = runWithFallback(P, Reduced, 10, needing("str.at", 500));
  EXPECT_FALSE(R.solved());
  EXPECT_DOUBLE_EQ(R.ElapsedSeconds, 100.0);
}

TEST(RunWithFallbackTest, RealEnumeratorKeepsSolvability) {
  SygusProblem P;
  P.TheGrammar = defaultGrammar();
  P.Constraints = {{{"ab-cd"}, "ab"}, {{"x-yz"}, "x"}, {{"123-4"}, "123"}};
  P.TimeoutSeconds = 30;
  Grammar Reduced = P.TheGrammar.dropTerminal("str.indexof")
                        .dropTerminal("str.replace");
  SynthesisResult R = runWithFallback(P, Reduced, 0.5, enumerativeSolver());
  ASSERT_TRUE(R.solved());
  EXPECT_TRUE(satisfiesAll(*R.Program, P.Constraints));
  EXPECT_LE(R.ElapsedSeconds, P.TimeoutSeconds);
}
