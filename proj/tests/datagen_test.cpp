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

#include "grt/datagen.hpp"
#include "grt/dataset_io.hpp"
#include "grt/errors.hpp"
#include "grt/sygus_format.hpp"
#include "oracle/reference.hpp"

#include "gtest/gtest.h"

#include <algorithm>
#include <sstream>

using namespace grt;

namespace {

std::vector<CritSample> sorted(std::vector<CritSample> V) {
  std::sort(V.begin(), V.end(), [](const CritSample &A, const CritSample &B) {
    return std::tie(A.ProgramId, A.Constraint.Inputs, A.Constraint.Output) <
           std::tie(B.ProgramId, B.Constraint.Inputs, B.Constraint.Output);
  });
  return V;
}

// Solver double: a fixed time per dropped terminal, the budget when the
// problem's "needed" terminal is gone.
SolveFn scripted(std::string Needed, double Base) {
  return [Needed, Base](const SygusProblem &P, double Budget) {
    if (!P.TheGrammar.hasTerminal(Needed))
      return SynthesisResult::timeout(Budget);
    double T = Base - 0.01 * static_cast<double>(15 - P.TheGrammar.terminals().size());
    return SynthesisResult::solvedWith(ProgramAst::var("x0", 0), T);
  };
}

} // namespace

TEST(CritDatasetTest, SoundAndLabelled) {
  Grammar G = defaultGrammar();
  auto Samples = genCritDataset(G, 200, 3, 1);
  ASSERT_EQ(Samples.size(), 600u);
  auto Names = G.terminalNames();
  for (const CritSample &S : Samples) {
    ProgramAst P = parseTerm(S.Program, G.inputVars());
    EXPECT_EQ(std::get<std::string>(oracle::refEval(P, S.Constraint.Inputs)),
              S.Constraint.Output);
    ASSERT_EQ(S.Label.size(), Names.size());
    auto Used = terminalOccurrences(P);
    for (std::size_t I = 0; I < Names.size(); ++I)
      EXPECT_EQ(S.Label[I], Used.count(Names[I]) ? 1 : 0);
    for (const std::string &In : S.Constraint.Inputs)
      EXPECT_LE(In.size(), 12u);
  }
}

TEST(CritDatasetTest, ShuffleSeedOnlyReorders) {
  Grammar G = defaultGrammar();
  auto A = genCritDataset(G, 100, 2, 1);
  auto B = genCritDataset(G, 100, 2, 2);
  EXPECT_NE(A, B);
  EXPECT_EQ(sorted(A), sorted(B));
  EXPECT_EQ(A, genCritDataset(G, 100, 2, 1));
}

TEST(CritDatasetTest, ExhaustedGrammar) {
  Grammar Bare({}, Sort::String, {}, {}, {}, {{"x0", Sort::String}});
  EXPECT_THROW(genCritDataset(Bare, 2, 1, 0), GrammarExhausted);
}

TEST(RandomInputTest, LengthAndAlphabet) {
  Rng R(9);
  for (int I = 0; I < 500; ++I) {
    std::string S = randomInput(R, 2, 5);
    EXPECT_GE(S.size(), 2u);
    EXPECT_LE(S.size(), 5u);
    for (char C : S)
      EXPECT_NE(defaultInputAlphabet().find(C), std::string_view::npos);
  }
  EXPECT_THROW(randomInput(R, 3, 2), Error);
}

TEST(CritProblemsTest, DeterministicAndNonTrivial) {
  Grammar G = defaultGrammar();
  auto Samples = genCritDataset(G, 300, 4, 3);
  auto A = problemsFromCritDataset(Samples, G, 20, 7);
  auto Shuffled = genCritDataset(G, 300, 4, 99);
  auto B = problemsFromCritDataset(Shuffled, G, 20, 7);
  ASSERT_EQ(A.size(), 20u);
  for (std::size_t I = 0; I < A.size(); ++I) {
    EXPECT_EQ(A[I].Id, B[I].Id);
    EXPECT_EQ(A[I].Problem, B[I].Problem);
    EXPECT_EQ(A[I].Problem.Constraints.size(), 4u);
  }
}

TEST(TimeDatasetTest, CompleteTableAndCapSemantics) {
  Grammar G = defaultGrammar();
  std::vector<NamedProblem> Problems;
  for (const char *Id : {"p1", "p2", "p3"}) {
    SygusProblem P;
    P.TheGrammar = G;
    P.Constraints = {{{"a"}, "a"}};
    Problems.push_back({Id, P});
  }
  auto Rows = genTimeDataset(Problems, scripted("str.at", 1.0), 4.0);
  ASSERT_EQ(Rows.size(), Problems.size() * G.terminals().size());
  for (const TimeSample &T : Rows) {
    EXPECT_DOUBLE_EQ(T.DeltaSeconds, T.FullSeconds - T.DroppedSeconds);
    if (T.Terminal == "str.at") {
      EXPECT_TRUE(T.DroppedTimedOut);
      EXPECT_DOUBLE_EQ(T.DroppedSeconds, 4.0);
      EXPECT_LT(T.DeltaSeconds, 0.0);
    } else {
      EXPECT_FALSE(T.DroppedTimedOut);
      EXPECT_GT(T.DeltaSeconds, 0.0);
    }
  }
}

TEST(TimeDatasetTest, MedianAndSkipAfterTimeout) {
  int Calls = 0;
  std::vector<double> Times = {3.0, 1.0, 2.0};
  SolveFn Seq = [&](const SygusProblem &, double) {
    return SynthesisResult::solvedWith(ProgramAst::var("x0", 0), Times[Calls++]);
  };
  SygusProblem P;
  EXPECT_DOUBLE_EQ(timeSolver(Seq, P, 10.0, 3).Seconds, 2.0);

  int Slow = 0;
  SolveFn Never = [&](const SygusProblem &, double B) {
    ++Slow;
    return SynthesisResult::timeout(B);
  };
  TimedRun R = timeSolver(Never, P, 5.0, 3);
  EXPECT_EQ(Slow, 1);
  EXPECT_TRUE(R.TimedOut);
  EXPECT_DOUBLE_EQ(R.Seconds, 5.0);
}

TEST(DatasetIoTest, CritRoundTripIsByteEqual) {
  Grammar G = defaultGrammar();
  CritDataset D{G.terminalNames(), genCritDataset(G, 50, 2, 0)};
  D.Samples[0].Constraint.Inputs[0] = "quote\" and \n newline";
  std::ostringstream A;
  writeCritDataset(A, D);
  std::istringstream In(A.str());
  CritDataset Back = readCritDataset(In);
  EXPECT_EQ(Back.Samples, D.Samples);
  std::ostringstream B;
  writeCritDataset(B, Back);
  EXPECT_EQ(A.str(), B.str());
}

TEST(DatasetIoTest, TimeRoundTripIsByteEqual) {
  TimeDataset D{defaultGrammar().terminalNames(),
                {{"str.at", "p1", 0.125, 4.0, -3.875, false, true},
                 {"ite", "p1", 0.125, 0.1, 0.025, false, false}}};
  std::ostringstream A;
  writeTimeDataset(A, D);
  std::istringstream In(A.str());
  TimeDataset Back = readTimeDataset(In);
  EXPECT_EQ(Back.Samples, D.Samples);
  std::ostringstream B;
  writeTimeDataset(B, Back);
  EXPECT_EQ(A.str(), B.str());
}

TEST(DatasetIoTest, RejectsMalformed) {
  std::istringstream Empty("");
  EXPECT_THROW(readCritDataset(Empty), FormatError);
  std::istringstream Wrong("{\"schema\":\"grt.time\",\"version\":1}\n");
  EXPECT_THROW(readCritDataset(Wrong), FormatError);

  Grammar G = defaultGrammar();
  CritDataset D{G.terminalNames(), genCritDataset(G, 5, 1, 0)};
  std::ostringstream A;
  writeCritDataset(A, D);
  std::istringstream Cut(A.str() + "{\"inputs\":[\"a\"]}\n");
  EXPECT_THROW(readCritDataset(Cut), FormatError);
}
