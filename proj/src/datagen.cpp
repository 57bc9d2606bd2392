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
#include "grt/sygus_format.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace grt {

std::string_view defaultInputAlphabet() {
  return "abcdefghijklmnopqrstuvwxyz0123456789 -.";
}

std::string randomInput(Rng &R, std::size_t MinLen, std::size_t MaxLen,
                        std::string_view Alphabet) {
  if (MinLen > MaxLen)
    throw Error("randomInput: empty length range");
  std::size_t Len = static_cast<std::size_t>(
      R.between(static_cast<std::int64_t>(MinLen),
                static_cast<std::int64_t>(MaxLen)));
  std::string S;
  if (Len == 0)
    return S;
  if (Alphabet.empty())
    throw Error("randomInput: empty alphabet");
  S.reserve(Len);
  for (std::size_t I = 0; I < Len; ++I)
    S += Alphabet[R.below(Alphabet.size())];
  return S;
}

std::vector<CritSample> genCritDataset(const Grammar &G,
                                       const CritConfig &Cfg) {
  if (Cfg.NumPrograms == 0 || Cfg.InputsPerProgram == 0)
    throw Error("genCritDataset: counts must be positive");
  std::vector<ProgramAst> Programs =
      stream(G, Cfg.NumPrograms, Cfg.Enumerator);

  const auto &Terms = G.terminals();
  const auto &Vars = G.inputVars();
  Rng InputRng(Cfg.InputSeed);
  std::vector<CritSample> Samples;
  Samples.reserve(Programs.size() * Cfg.InputsPerProgram);
  for (std::size_t PI = 0; PI < Programs.size(); ++PI) {
    const ProgramAst &P = Programs[PI];
    std::set<std::string> Used = terminalOccurrences(P);
    std::vector<std::uint8_t> Label(Terms.size(), 0);
    for (std::size_t TI = 0; TI < Terms.size(); ++TI)
      Label[TI] = Used.count(Terms[TI].Name) ? 1 : 0;
    std::string Text = printTerm(P, Vars);
    std::string Id = "p" + std::to_string(PI);
    for (std::size_t K = 0; K < Cfg.InputsPerProgram; ++K) {
      IoConstraint C;
      for (std::size_t V = 0; V < Vars.size(); ++V)
        C.Inputs.push_back(randomInput(InputRng, Cfg.MinInputLength,
                                       Cfg.MaxInputLength, Cfg.Alphabet));
      C.Output = std::get<std::string>(evaluate(P, C.Inputs));
      Samples.push_back({std::move(C), Label, Id, Text});
    }
  }
  Rng ShuffleRng(Cfg.ShuffleSeed);
  ShuffleRng.shuffle(Samples);
  return Samples;
}

std::vector<CritSample> genCritDataset(const Grammar &G,
                                       std::size_t NumPrograms,
                                       std::size_t InputsPerProgram,
                                       std::uint64_t Seed) {
  CritConfig Cfg;
  Cfg.NumPrograms = NumPrograms;
  Cfg.InputsPerProgram = InputsPerProgram;
  Cfg.ShuffleSeed = Seed;
  return genCritDataset(G, Cfg);
}

std::vector<NamedProblem>
problemsFromCritDataset(const std::vector<CritSample> &Samples,
                        const Grammar &G, std::size_t Count,
                        std::uint64_t Seed) {
  // Constraints per program, in a canonical order so the result does not
  // depend on how the samples were shuffled.
  std::map<std::string, std::vector<IoConstraint>> ByProgram;
  for (const CritSample &S : Samples) {
    if (std::none_of(S.Label.begin(), S.Label.end(),
                     [](std::uint8_t B) { return B != 0; }))
      continue;
    ByProgram[S.ProgramId].push_back(S.Constraint);
  }
  std::vector<std::string> Ids;
  for (auto &[Id, Cs] : ByProgram) {
    std::sort(Cs.begin(), Cs.end(), [](const auto &A, const auto &B) {
      return std::tie(A.Inputs, A.Output) < std::tie(B.Inputs, B.Output);
    });
    Ids.push_back(Id);
  }
  Rng R(Seed);
  R.shuffle(Ids);
  Ids.resize(std::min(Count, Ids.size()));
  std::sort(Ids.begin(), Ids.end());

  std::vector<NamedProblem> Out;
  for (const std::string &Id : Ids) {
    SygusProblem P;
    P.TheGrammar = G;
    P.Constraints = ByProgram[Id];
    Out.push_back({"crit-" + Id, std::move(P)});
  }
  return Out;
}

TimedRun timeSolver(const SolveFn &Solver, const SygusProblem &P,
                    double Budget, std::size_t Repeats) {
  struct Run {
    double Seconds;
    bool TimedOut;
  };
  std::vector<Run> Runs;
  std::optional<ProgramAst> Program;
  for (std::size_t I = 0; I < std::max<std::size_t>(Repeats, 1); ++I) {
    SynthesisResult R = Solver(P, Budget);
    if (!R.solved()) {
      // Later repeats would not solve either.
      while (Runs.size() < std::max<std::size_t>(Repeats, 1))
        Runs.push_back({Budget, true});
      break;
    }
    if (!Program)
      Program = R.Program;
    Runs.push_back({std::min(R.ElapsedSeconds, Budget), false});
  }
  std::sort(Runs.begin(), Runs.end(), [](const Run &A, const Run &B) {
    return std::tie(A.Seconds, A.TimedOut) < std::tie(B.Seconds, B.TimedOut);
  });
  const Run &Median = Runs[(Runs.size() - 1) / 2];
  TimedRun T;
  T.Seconds = Median.Seconds;
  T.TimedOut = Median.TimedOut;
  if (!T.TimedOut)
    T.Program = std::move(Program);
  return T;
}

std::vector<TimeSample> genTimeDataset(const std::vector<NamedProblem> &Problems,
                                       const SolveFn &Solver, double Budget,
                                       const TimeConfig &Cfg) {
  std::vector<TimeSample> Out;
  for (const NamedProblem &NP : Problems) {
    TimedRun Full = timeSolver(Solver, NP.Problem, Budget, Cfg.Repeats);
    for (const TerminalSymbol &T : NP.Problem.TheGrammar.terminals()) {
      SygusProblem Dropped = NP.Problem;
      Dropped.TheGrammar = NP.Problem.TheGrammar.dropTerminal(T.Name);
      TimedRun D = timeSolver(Solver, Dropped, Budget, Cfg.Repeats);
      TimeSample S;
      S.Terminal = T.Name;
      S.ProblemId = NP.Id;
      S.FullSeconds = Full.Seconds;
      S.DroppedSeconds = D.Seconds;
      S.DeltaSeconds = Full.Seconds - D.Seconds;
      S.FullTimedOut = Full.TimedOut;
      S.DroppedTimedOut = D.TimedOut;
      if (Cfg.OnSample)
        Cfg.OnSample(NP.Id, T.Name, S);
      Out.push_back(std::move(S));
    }
  }
  return Out;
}

} // namespace grt
