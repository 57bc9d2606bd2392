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

#include "grt/bench.hpp"
#include "grt/datagen.hpp"
#include "grt/sygus_format.hpp"
#include "jsonl.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

namespace grt {

using nlohmann::json;

std::string_view modeName(Mode M) {
  switch (M) {
  case Mode::Baseline:
    return "baseline";
  case Mode::Grt:
    return "grt";
  case Mode::Grtc:
    return "grtc";
  }
  return "baseline";
}

Mode parseMode(std::string_view Name) {
  if (Name == "baseline")
    return Mode::Baseline;
  if (Name == "grt")
    return Mode::Grt;
  if (Name == "grtc")
    return Mode::Grtc;
  throw Error("unknown mode '" + std::string(Name) +
              "' (expected baseline, grt or grtc)");
}

std::string_view outcomeName(Outcome O) {
  switch (O) {
  case Outcome::Solved:
    return "solved";
  case Outcome::Timeout:
    return "timeout";
  case Outcome::Error:
    return "error";
  }
  return "error";
}

namespace {

Outcome parseOutcome(const std::string &S) {
  if (S == "solved")
    return Outcome::Solved;
  if (S == "timeout")
    return Outcome::Timeout;
  if (S == "error")
    return Outcome::Error;
  throw FormatError("unknown outcome '" + S + "'");
}

using Clock = std::chrono::steady_clock;

// Times \p Solver on \p P and re-checks any answer against the constraints
// with the local interpreter.
RunRecord measure(const SolveFn &Solver, const SygusProblem &P,
                  const BenchConfig &Cfg) {
  RunRecord R;
  try {
    TimedRun T = timeSolver(Solver, P, Cfg.TimeoutSeconds, Cfg.Repeats);
    R.Seconds = T.Seconds;
    if (T.TimedOut) {
      R.Status = Outcome::Timeout;
      return R;
    }
    const ProgramAst &Prog = *T.Program;
    R.Program = printTerm(Prog, P.TheGrammar.inputVars());
    if (Prog.sort() != Sort::String || !satisfiesAll(Prog, P.Constraints)) {
      R.Status = Outcome::Error;
      R.Message = "answer fails the constraints: " + R.Program;
      return R;
    }
    R.Status = Outcome::Solved;
    R.Size = programSize(Prog);
  } catch (const std::exception &E) {
    R = RunRecord{};
    R.Status = Outcome::Error;
    R.Message = E.what();
  }
  return R;
}

std::size_t workerCount(std::size_t Requested, std::size_t Tasks) {
  std::size_t Hw = std::thread::hardware_concurrency();
  std::size_t Cap = Hw > 1 ? Hw - 1 : 1;
  return std::max<std::size_t>(1, std::min({Requested, Cap, Tasks}));
}

template <typename Fn> void parallelFor(std::size_t N, std::size_t Jobs, Fn F) {
  std::size_t Workers = workerCount(Jobs, N);
  if (Workers <= 1) {
    for (std::size_t I = 0; I < N; ++I)
      F(I);
    return;
  }
  std::atomic<std::size_t> Next{0};
  std::vector<std::thread> Pool;
  for (std::size_t W = 0; W < Workers; ++W)
    Pool.emplace_back([&] {
      for (std::size_t I; (I = Next++) < N;)
        F(I);
    });
  for (std::thread &T : Pool)
    T.join();
}

} // namespace

PruneDecision pruneFor(const SygusProblem &P, Mode M, const BenchConfig &Cfg) {
  if (M == Mode::Baseline) {
    PruneDecision D;
    D.Reduced = P.TheGrammar;
    return D;
  }
  if (!Cfg.Weights)
    throw Error("mode " + std::string(modeName(M)) + " needs model weights");
  VoteVector V = vote(*Cfg.Weights, P.Constraints, Cfg.Threshold);
  if (M == Mode::Grtc)
    return decideCriticalityOnly(P.TheGrammar, V);
  if (!Cfg.Savings)
    throw Error("mode grt needs a savings table");
  return decide(P.TheGrammar, *Cfg.Savings, V);
}

std::vector<BenchRecord>
runSuite(const std::vector<NamedProblem> &Problems, Mode M,
         const BenchConfig &Cfg, const std::vector<BenchRecord> *Baseline) {
  if (!Cfg.Solver)
    throw Error("runSuite: no solver configured");
  std::map<std::string, const BenchRecord *> Known;
  if (Baseline)
    for (const BenchRecord &R : *Baseline)
      Known.emplace(R.Id, &R);

  std::vector<BenchRecord> Records(Problems.size());
  std::mutex Lock;
  parallelFor(Problems.size(), Cfg.Jobs, [&](std::size_t I) {
    const NamedProblem &NP = Problems[I];
    SygusProblem P = NP.Problem;
    P.TimeoutSeconds = Cfg.TimeoutSeconds;
    BenchRecord Rec;
    Rec.Id = NP.Id;
    Rec.RunMode = M;
    Rec.TimeoutSeconds = Cfg.TimeoutSeconds;

    auto It = Known.find(NP.Id);
    if (It != Known.end() && It->second->TimeoutSeconds == Cfg.TimeoutSeconds)
      Rec.Full = It->second->Full;
    else
      Rec.Full = measure(Cfg.Solver, P, Cfg);

    if (M == Mode::Baseline) {
      Rec.Pruned = Rec.Full;
    } else {
      bool Fallback = false;
      SolveFn Pruned = [&](const SygusProblem &Q, double) {
        auto Start = Clock::now();
        PruneDecision D = pruneFor(Q, M, Cfg);
        double Decide =
            std::chrono::duration<double>(Clock::now() - Start).count();
        SygusProblem Budgeted = Q;
        Budgeted.TimeoutSeconds = std::max(0.0, Q.TimeoutSeconds - Decide);
        SynthesisResult R = runWithFallback(Budgeted, D.Reduced,
                                            Cfg.FallbackSeconds, Cfg.Solver,
                                            &Fallback);
        R.ElapsedSeconds = std::min(R.ElapsedSeconds + Decide, Q.TimeoutSeconds);
        return R;
      };
      try {
        PruneDecision D = pruneFor(P, M, Cfg);
        Rec.Removed = D.Removed;
        Rec.Candidates = D.Candidates;
        Rec.CandidateSavings = D.CandidateSavings;
        for (std::size_t T = 0; T < D.Votes.Terminals.size(); ++T)
          Rec.Votes[D.Votes.Terminals[T]] = D.Votes.Counts[T];
        Rec.Pruned = measure(Pruned, P, Cfg);
        Rec.UsedFallback = Fallback;
      } catch (const std::exception &E) {
        Rec.Pruned.Status = Outcome::Error;
        Rec.Pruned.Message = E.what();
      }
    }
    std::lock_guard<std::mutex> Guard(Lock);
    Records[I] = std::move(Rec);
    if (Cfg.OnRecord)
      Cfg.OnRecord(Records[I]);
  });
  return Records;
}

double calibrateFallback(const std::vector<NamedProblem> &Problems,
                         const BenchConfig &Cfg,
                         std::span<const double> Grid) {
  const double Inf = std::numeric_limits<double>::infinity();
  std::vector<FallbackRun> Runs;
  for (const NamedProblem &NP : Problems) {
    PruneDecision D = pruneFor(NP.Problem, Mode::Grt, Cfg);
    SygusProblem Reduced = NP.Problem;
    Reduced.TheGrammar = D.Reduced;
    TimedRun Star =
        timeSolver(Cfg.Solver, Reduced, Cfg.TimeoutSeconds, Cfg.Repeats);
    TimedRun Full =
        timeSolver(Cfg.Solver, NP.Problem, Cfg.TimeoutSeconds, Cfg.Repeats);
    Runs.push_back({Star.TimedOut ? Inf : Star.Seconds,
                    Full.TimedOut ? Inf : Full.Seconds});
  }
  return fallbackPoint(Runs, Cfg.TimeoutSeconds, Grid);
}

std::size_t speedPoints(double Seconds) {
  double Ms = std::max(Seconds, 0.001) / 0.001;
  double Points = 6.0 - std::floor(std::log10(Ms));
  return Points > 0 ? static_cast<std::size_t>(Points) : 0;
}

std::size_t sizePoints(std::size_t Size) {
  double Points =
      5.0 - std::floor(std::log10(static_cast<double>(std::max<std::size_t>(Size, 1))));
  return Points > 0 ? static_cast<std::size_t>(Points) : 0;
}

Score score(const std::vector<BenchRecord> &Records, Side S) {
  Score Sc;
  for (const BenchRecord &R : Records) {
    const RunRecord &Run = S == Side::Full ? R.Full : R.Pruned;
    if (!Run.solved())
      continue;
    ++Sc.N;
    Sc.F += speedPoints(Run.Seconds);
    Sc.S += sizePoints(Run.Size);
  }
  Sc.Total = 5 * Sc.N + 3 * Sc.F + Sc.S;
  return Sc;
}

double SuiteTotals::reductionPercent() const {
  if (FullSeconds <= 0.0)
    return 0.0;
  return (FullSeconds - PrunedSeconds) / FullSeconds * 100.0;
}

SuiteTotals totals(const std::vector<BenchRecord> &Records) {
  SuiteTotals T;
  double LogSum = 0.0;
  for (const BenchRecord &R : Records) {
    if (!R.Full.solved()) {
      T.NewlySolved += R.Pruned.solved();
      continue;
    }
    ++T.Counted;
    T.FullSeconds += R.Full.Seconds;
    T.PrunedSeconds += R.Pruned.Seconds;
    T.NewFailures += !R.Pruned.solved();
    LogSum += std::log(std::max(R.Full.Seconds, 1e-6) /
                       std::max(R.Pruned.Seconds, 1e-6));
  }
  if (T.Counted > 0)
    T.GeoMeanSpeedup = std::exp(LogSum / static_cast<double>(T.Counted));
  return T;
}

namespace {

std::string cell(const RunRecord &R) {
  char Buf[32];
  if (R.Status == Outcome::Error)
    return "error";
  if (R.Status == Outcome::Timeout)
    std::snprintf(Buf, sizeof(Buf), ">%.3f", R.Seconds);
  else
    std::snprintf(Buf, sizeof(Buf), "%.3f", R.Seconds);
  return Buf;
}

std::string joined(const std::vector<std::string> &Names) {
  std::string Out;
  for (const std::string &N : Names)
    Out += (Out.empty() ? "" : ",") + N;
  return Out.empty() ? "-" : Out;
}

} // namespace

std::string formatReport(const std::vector<BenchRecord> &Records) {
  std::ostringstream OS;
  char Line[512];
  std::snprintf(Line, sizeof(Line), "%-28s %-8s %12s %12s %5s %5s  %s\n", "id",
                "mode", "t_full_s", "t_pruned_s", "|P|", "|P*|", "removed");
  OS << Line;
  for (const BenchRecord &R : Records) {
    std::snprintf(Line, sizeof(Line), "%-28s %-8s %12s %12s %5zu %5zu  %s%s\n",
                  R.Id.c_str(), std::string(modeName(R.RunMode)).c_str(),
                  cell(R.Full).c_str(), cell(R.Pruned).c_str(), R.Full.Size,
                  R.Pruned.Size, joined(R.Removed).c_str(),
                  R.UsedFallback ? " (fallback)" : "");
    OS << Line;
  }
  SuiteTotals T = totals(Records);
  Score SF = score(Records, Side::Full), SP = score(Records, Side::Pruned);
  std::snprintf(Line, sizeof(Line),
                "\ntotal over %zu baseline-solved: full %.2f s, pruned %.2f s, "
                "reduction %.2f%%, geometric-mean speedup %.2fx\n",
                T.Counted, T.FullSeconds, T.PrunedSeconds, T.reductionPercent(),
                T.GeoMeanSpeedup);
  OS << Line;
  std::snprintf(Line, sizeof(Line),
                "new failures %zu, newly solved %zu\n", T.NewFailures,
                T.NewlySolved);
  OS << Line;
  std::snprintf(Line, sizeof(Line),
                "score full:   N=%zu F=%zu S=%zu total=%zu\n"
                "score pruned: N=%zu F=%zu S=%zu total=%zu\n",
                SF.N, SF.F, SF.S, SF.Total, SP.N, SP.F, SP.S, SP.Total);
  OS << Line;
  return OS.str();
}

namespace {

json runToJson(const RunRecord &R) {
  return {{"outcome", outcomeName(R.Status)},
          {"t_s", R.Seconds},
          {"size", R.Size},
          {"program", R.Program},
          {"message", R.Message}};
}

RunRecord runFromJson(const json &J, const jsonl::Reader &Rd) {
  RunRecord R;
  std::string Outcome;
  jsonl::get(J, "outcome", Outcome, Rd);
  try {
    R.Status = parseOutcome(Outcome);
  } catch (const FormatError &E) {
    Rd.fail(E.what());
  }
  jsonl::get(J, "t_s", R.Seconds, Rd);
  jsonl::get(J, "size", R.Size, Rd);
  jsonl::get(J, "program", R.Program, Rd);
  jsonl::get(J, "message", R.Message, Rd);
  return R;
}

} // namespace

void writeResults(std::ostream &OS, const std::vector<BenchRecord> &Records,
                  const std::vector<std::string> &Terminals) {
  jsonl::writeHeader(OS, "grt.results", ResultsFormatVersion, Terminals);
  for (const BenchRecord &R : Records)
    jsonl::writeLine(OS, json{{"id", R.Id},
                              {"mode", modeName(R.RunMode)},
                              {"timeout_s", R.TimeoutSeconds},
                              {"full", runToJson(R.Full)},
                              {"pruned", runToJson(R.Pruned)},
                              {"removed", R.Removed},
                              {"candidates", R.Candidates},
                              {"candidate_savings_s", R.CandidateSavings},
                              {"votes", R.Votes},
                              {"used_fallback", R.UsedFallback}});
}

std::vector<BenchRecord> readResults(std::istream &IS) {
  jsonl::Reader Rd(IS, "grt.results", ResultsFormatVersion);
  std::vector<BenchRecord> Out;
  while (auto J = Rd.next()) {
    BenchRecord R;
    jsonl::get(*J, "id", R.Id, Rd);
    std::string M;
    jsonl::get(*J, "mode", M, Rd);
    try {
      R.RunMode = parseMode(M);
    } catch (const Error &E) {
      Rd.fail(E.what());
    }
    jsonl::get(*J, "timeout_s", R.TimeoutSeconds, Rd);
    if (!J->contains("full") || !J->contains("pruned"))
      Rd.fail("record lacks full or pruned run");
    R.Full = runFromJson((*J)["full"], Rd);
    R.Pruned = runFromJson((*J)["pruned"], Rd);
    jsonl::get(*J, "removed", R.Removed, Rd);
    jsonl::get(*J, "candidates", R.Candidates, Rd);
    jsonl::get(*J, "candidate_savings_s", R.CandidateSavings, Rd);
    jsonl::get(*J, "votes", R.Votes, Rd);
    jsonl::get(*J, "used_fallback", R.UsedFallback, Rd);
    Out.push_back(std::move(R));
  }
  return Out;
}

void saveResults(const std::filesystem::path &Path,
                 const std::vector<BenchRecord> &Records,
                 const std::vector<std::string> &Terminals) {
  std::ofstream OS = jsonl::openOut(Path);
  writeResults(OS, Records, Terminals);
}

std::vector<BenchRecord> loadResults(const std::filesystem::path &Path) {
  std::ifstream IS = jsonl::openIn(Path);
  return readResults(IS);
}

} // namespace grt
