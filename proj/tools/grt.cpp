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

// grt: command-line driver for parsing, solving, data generation, training,
// pruning and benchmarking.

#include "grt/bench.hpp"
#include "grt/datagen.hpp"
#include "grt/dataset_io.hpp"
#include "grt/enumerator.hpp"
#include "grt/external_solver.hpp"
#include "grt/neural.hpp"
#include "grt/pruner.hpp"
#include "grt/suite_gen.hpp"
#include "grt/sygus_format.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

using namespace grt;
namespace fs = std::filesystem;

namespace {

struct GlobalOptions {
  double Timeout = 60.0;
  std::uint64_t Seed = 0;
  std::string GrammarConfig;
  std::string Weights;
  std::string SolverCmd;
  std::string ModeName = "baseline";
};

// Grammar config: {"terminals": [...], "string_literals": [...],
// "int_literals": [...], "bool_literals": [...]}; absent keys keep the
// default grammar's value.
Grammar loadGrammar(const GlobalOptions &G) {
  Grammar Def = defaultGrammar();
  if (G.GrammarConfig.empty())
    return Def;
  std::ifstream IS(G.GrammarConfig);
  if (!IS)
    throw Error("cannot open grammar config " + G.GrammarConfig);
  nlohmann::json J;
  try {
    J = nlohmann::json::parse(IS);
  } catch (const nlohmann::json::exception &E) {
    throw FormatError(G.GrammarConfig + ": " + E.what());
  }
  std::vector<TerminalSymbol> Terms = Def.terminals();
  if (J.contains("terminals")) {
    Terms.clear();
    for (const std::string &N : J["terminals"].get<std::vector<std::string>>())
      Terms.push_back(lookupTerminal(N));
  }
  auto Str = J.value("string_literals", Def.stringLiterals());
  auto Ints = J.value("int_literals", Def.intLiterals());
  auto Bools = J.value("bool_literals", Def.boolLiterals());
  return Grammar(std::move(Terms), Sort::String, std::move(Str),
                 std::move(Ints), std::move(Bools), Def.inputVars());
}

SolveFn makeSolver(const GlobalOptions &G) {
  if (!G.SolverCmd.empty())
    return externalSolver(G.SolverCmd);
  return enumerativeSolver();
}

std::vector<NamedProblem> loadProblems(const std::vector<std::string> &Paths) {
  std::vector<NamedProblem> Out;
  for (const std::string &P : Paths) {
    if (fs::is_directory(P)) {
      for (const ProblemFile &F : loadProblemDir(P))
        Out.push_back(F.named());
    } else {
      Out.push_back(loadProblemFile(P).named());
    }
  }
  return Out;
}

struct Model {
  std::optional<ModelWeights> Weights;
  std::optional<SavingsTable> Savings;
};

Model loadModel(const GlobalOptions &G, const std::string &TimeData,
                const Grammar &Gr) {
  Model M;
  if (!G.Weights.empty())
    M.Weights = loadWeights(G.Weights, Gr.terminalNames());
  if (!TimeData.empty())
    M.Savings = savings(loadTimeDataset(TimeData).Samples);
  return M;
}

nlohmann::json decisionJson(const PruneDecision &D) {
  nlohmann::json Votes = nlohmann::json::object();
  for (std::size_t I = 0; I < D.Votes.Terminals.size(); ++I)
    Votes[D.Votes.Terminals[I]] = D.Votes.Counts[I];
  return {{"removed", D.Removed},
          {"candidates", D.Candidates},
          {"candidate_savings_s", D.CandidateSavings},
          {"votes", Votes},
          {"constraints", D.Votes.NumConstraints},
          {"reduced", D.Reduced.terminalNames()}};
}

void progress(const std::string &Msg) { std::cerr << Msg << std::endl; }

} // namespace

int main(int argc, char **argv) {
  CLI::App App{"Grammar reduction for PBE string synthesis"};
  App.require_subcommand(1);
  GlobalOptions G;
  App.add_option("--timeout", G.Timeout, "Per-problem time budget in seconds")
      ->capture_default_str();
  App.add_option("--seed", G.Seed, "Random seed")->capture_default_str();
  App.add_option("--grammar-config", G.GrammarConfig,
                 "JSON grammar description (default: full string grammar)");
  App.add_option("--weights", G.Weights, "Model weights file");
  App.add_option("--solver-cmd", G.SolverCmd,
                 "External solver command; {file} is replaced by the problem "
                 "path");
  App.add_option("--mode", G.ModeName, "baseline, grt or grtc")
      ->capture_default_str();

  // parse
  auto *Parse = App.add_subcommand("parse", "Parse and print normalized problems");
  std::vector<std::string> ParseFiles;
  bool ParseCheck = false;
  Parse->add_option("files", ParseFiles, "Problem files or directories")
      ->required();
  Parse->add_flag("--check", ParseCheck,
                  "Only check that printing is a parse fixpoint");

  // solve
  auto *Solve = App.add_subcommand("solve", "Solve one problem");
  std::string SolveFile, SolveTimeData;
  double SolveFallback = 1.0;
  Solve->add_option("file", SolveFile, "Problem file")->required();
  Solve->add_option("--time-data", SolveTimeData, "Timing dataset (grt mode)");
  Solve->add_option("--fallback-x", SolveFallback,
                    "Seconds on the reduced grammar before falling back")
      ->capture_default_str();

  // stream
  auto *Stream = App.add_subcommand("stream", "Enumerate distinct programs");
  std::size_t StreamN = 2000;
  Stream->add_option("-n", StreamN, "Number of programs")->capture_default_str();

  // datagen-crit
  auto *Crit = App.add_subcommand("datagen-crit", "Build the criticality dataset");
  CritConfig CritCfg;
  std::string CritOut;
  Crit->add_option("--programs", CritCfg.NumPrograms)->capture_default_str();
  Crit->add_option("--inputs-per-program", CritCfg.InputsPerProgram)
      ->capture_default_str();
  Crit->add_option("--input-seed", CritCfg.InputSeed)->capture_default_str();
  Crit->add_option("-o,--output", CritOut, "Output JSONL file")->required();

  // datagen-time
  auto *Time = App.add_subcommand("datagen-time", "Build the timing dataset");
  std::vector<std::string> TimeProblems;
  std::string TimeCrit, TimeOut;
  std::size_t TimeCritCount = 20, TimeRepeats = 3;
  Time->add_option("problems", TimeProblems,
                   "Hand-written problem files or directories");
  Time->add_option("--crit", TimeCrit,
                   "Criticality dataset to draw further problems from");
  Time->add_option("--crit-count", TimeCritCount)->capture_default_str();
  Time->add_option("--repeats", TimeRepeats)->capture_default_str();
  Time->add_option("-o,--output", TimeOut, "Output JSONL file")->required();

  // train
  auto *Train = App.add_subcommand("train", "Train the criticality model");
  TrainConfig TrainCfg;
  std::string TrainData, TrainOut;
  Train->add_option("--data", TrainData, "Criticality dataset")->required();
  Train->add_option("--epochs", TrainCfg.Epochs)->capture_default_str();
  Train->add_option("--batch-size", TrainCfg.BatchSize)->capture_default_str();
  Train->add_option("--learning-rate", TrainCfg.LearningRate)
      ->capture_default_str();
  Train->add_option("--dropout", TrainCfg.DropoutRate)->capture_default_str();
  Train->add_option("-o,--output", TrainOut, "Weights file")->required();

  // prune
  auto *Prune = App.add_subcommand("prune", "Show the reduced grammar for a problem");
  std::string PruneFile, PruneTimeData;
  double PruneThreshold = 0.5;
  Prune->add_option("file", PruneFile, "Problem file")->required();
  Prune->add_option("--time-data", PruneTimeData, "Timing dataset");
  Prune->add_option("--threshold", PruneThreshold)->capture_default_str();

  // bench
  auto *Bench = App.add_subcommand("bench", "Run a benchmark suite");
  std::vector<std::string> BenchProblems;
  std::string BenchTimeData, BenchOut, BenchCalibrate;
  std::optional<double> BenchFallback;
  std::size_t BenchRepeats = 3, BenchJobs = 1;
  bool BenchSerial = false;
  Bench->add_option("problems", BenchProblems, "Problem files or directories")
      ->required();
  Bench->add_option("--time-data", BenchTimeData, "Timing dataset (grt mode)");
  Bench->add_option("--fallback-x", BenchFallback,
                    "Seconds on the reduced grammar before falling back");
  Bench->add_option("--calibrate", BenchCalibrate,
                    "Pick the fallback point from problems in this directory");
  Bench->add_option("--repeats", BenchRepeats)->capture_default_str();
  Bench->add_option("--jobs", BenchJobs)->capture_default_str();
  Bench->add_flag("--serial", BenchSerial, "Run one benchmark at a time");
  Bench->add_option("-o,--output", BenchOut, "Results JSONL file");

  // score
  auto *ScoreCmd = App.add_subcommand("score", "Score a results file");
  std::string ScoreFile;
  ScoreCmd->add_option("results", ScoreFile, "Results JSONL file")->required();

  // gen-suite
  auto *Gen = App.add_subcommand("gen-suite", "Generate benchmark problems");
  SuiteConfig GenCfg;
  std::string GenOut;
  double GenMin = 0.0, GenMax = 0.0;
  Gen->add_option("--count", GenCfg.Count)->capture_default_str();
  Gen->add_option("--examples", GenCfg.ExamplesPerProblem)->capture_default_str();
  Gen->add_option("--prefix", GenCfg.IdPrefix)->capture_default_str();
  Gen->add_option("--min-time", GenMin,
                  "Keep problems the baseline needs at least this long for");
  Gen->add_option("--max-time", GenMax,
                  "Keep problems the baseline solves within this time");
  Gen->add_option("-o,--output", GenOut, "Output directory")->required();

  CLI11_PARSE(App, argc, argv);

  try {
    Grammar Gr = loadGrammar(G);

    if (*Parse) {
      int Status = 0;
      for (const std::string &Path : ParseFiles) {
        std::vector<fs::path> Files;
        if (fs::is_directory(Path))
          for (const ProblemFile &F : loadProblemDir(Path))
            Files.push_back(F.Path);
        else
          Files.push_back(Path);
        for (const fs::path &F : Files) {
          std::string Once = printProblem(loadProblemFile(F).Parsed);
          if (!ParseCheck) {
            std::cout << Once;
            continue;
          }
          bool Fix = printProblem(parseProblem(Once)) == Once;
          std::cout << (Fix ? "ok   " : "FAIL ") << F.string() << "\n";
          Status |= !Fix;
        }
      }
      return Status;
    }

    if (*Solve) {
      ProblemFile F = loadProblemFile(SolveFile);
      SygusProblem P = F.Parsed;
      P.TimeoutSeconds = G.Timeout;
      SolveFn Solver = makeSolver(G);
      SynthesisResult R;
      Mode M = parseMode(G.ModeName);
      if (M == Mode::Baseline) {
        R = Solver(P, G.Timeout);
      } else {
        Model Mo = loadModel(G, SolveTimeData, P.TheGrammar);
        BenchConfig Cfg;
        Cfg.Weights = Mo.Weights ? &*Mo.Weights : nullptr;
        Cfg.Savings = Mo.Savings ? &*Mo.Savings : nullptr;
        PruneDecision D = pruneFor(P, M, Cfg);
        std::cerr << "; removed:";
        for (const std::string &N : D.Removed)
          std::cerr << " " << N;
        std::cerr << "\n";
        R = runWithFallback(P, D.Reduced, SolveFallback, Solver);
      }
      if (!R.solved()) {
        std::cout << "; timeout after " << R.ElapsedSeconds << " s\n";
        return 0;
      }
      std::cout << printSolution(*R.Program, P.FunctionName,
                                 P.TheGrammar.inputVars())
                << "\n";
      std::cerr << "; " << R.ElapsedSeconds << " s, size "
                << programSize(*R.Program) << "\n";
      return 0;
    }

    if (*Stream) {
      for (const ProgramAst &P : stream(Gr, StreamN))
        std::cout << printTerm(P, Gr.inputVars()) << "\n";
      return 0;
    }

    if (*Crit) {
      CritCfg.ShuffleSeed = G.Seed;
      CritDataset D{Gr.terminalNames(), genCritDataset(Gr, CritCfg)};
      saveCritDataset(CritOut, D);
      progress("wrote " + std::to_string(D.Samples.size()) + " samples to " +
               CritOut);
      return 0;
    }

    if (*Time) {
      std::vector<NamedProblem> Problems = loadProblems(TimeProblems);
      if (!TimeCrit.empty()) {
        CritDataset D = loadCritDataset(TimeCrit);
        if (D.Terminals != Gr.terminalNames())
          throw Error("criticality dataset was built for another grammar");
        for (NamedProblem &P :
             problemsFromCritDataset(D.Samples, Gr, TimeCritCount, G.Seed))
          Problems.push_back(std::move(P));
      }
      TimeConfig Cfg;
      Cfg.Repeats = TimeRepeats;
      Cfg.OnSample = [](const std::string &Id, const std::string &T,
                        const TimeSample &S) {
        char Buf[256];
        std::snprintf(Buf, sizeof(Buf), "%-24s %-14s full %8.3f  dropped %8.3f",
                      Id.c_str(), T.c_str(), S.FullSeconds, S.DroppedSeconds);
        progress(Buf);
      };
      TimeDataset D{Gr.terminalNames(),
                    genTimeDataset(Problems, makeSolver(G), G.Timeout, Cfg)};
      saveTimeDataset(TimeOut, D);
      progress("wrote " + std::to_string(D.Samples.size()) + " samples to " +
               TimeOut);
      return 0;
    }

    if (*Train) {
      CritDataset D = loadCritDataset(TrainData);
      TrainCfg.Seed = G.Seed;
      TrainCfg.OnEpoch = [](std::size_t E, double L) {
        progress("epoch " + std::to_string(E) + " loss " + std::to_string(L));
      };
      TrainResult R = train(D.Samples, D.Terminals, TrainCfg);
      saveWeights(TrainOut, R.Weights);
      progress("wrote " + TrainOut);
      return 0;
    }

    if (*Prune) {
      ProblemFile F = loadProblemFile(PruneFile);
      Model Mo = loadModel(G, PruneTimeData, F.Parsed.TheGrammar);
      BenchConfig Cfg;
      Cfg.Threshold = PruneThreshold;
      Cfg.Weights = Mo.Weights ? &*Mo.Weights : nullptr;
      Cfg.Savings = Mo.Savings ? &*Mo.Savings : nullptr;
      Mode M = parseMode(G.ModeName == "baseline" ? "grt" : G.ModeName);
      std::cout << decisionJson(pruneFor(F.Parsed, M, Cfg)).dump(2) << "\n";
      return 0;
    }

    if (*Bench) {
      std::vector<NamedProblem> Problems = loadProblems(BenchProblems);
      Mode M = parseMode(G.ModeName);
      Model Mo = loadModel(G, BenchTimeData, Gr);
      BenchConfig Cfg;
      Cfg.TimeoutSeconds = G.Timeout;
      Cfg.Repeats = BenchRepeats;
      Cfg.Jobs = BenchSerial ? 1 : BenchJobs;
      Cfg.Solver = makeSolver(G);
      Cfg.Weights = Mo.Weights ? &*Mo.Weights : nullptr;
      Cfg.Savings = Mo.Savings ? &*Mo.Savings : nullptr;
      Cfg.FallbackSeconds = defaultFallbackGrid().front();
      if (BenchFallback) {
        Cfg.FallbackSeconds = *BenchFallback;
      } else if (!BenchCalibrate.empty()) {
        Cfg.FallbackSeconds = calibrateFallback(loadProblems({BenchCalibrate}),
                                                Cfg, defaultFallbackGrid());
        progress("fallback point " + std::to_string(Cfg.FallbackSeconds) + " s");
      }
      Cfg.OnRecord = [](const BenchRecord &R) {
        char Buf[256];
        std::snprintf(Buf, sizeof(Buf), "%-28s full %-8s %8.3f  pruned %-8s %8.3f",
                      R.Id.c_str(), std::string(outcomeName(R.Full.Status)).c_str(),
                      R.Full.Seconds,
                      std::string(outcomeName(R.Pruned.Status)).c_str(),
                      R.Pruned.Seconds);
        progress(Buf);
      };
      std::vector<BenchRecord> Records = runSuite(Problems, M, Cfg);
      std::cout << formatReport(Records);
      if (!BenchOut.empty())
        saveResults(BenchOut, Records, Gr.terminalNames());
      for (const BenchRecord &R : Records)
        if (R.crashed()) {
          std::cerr << R.Id << ": " << R.Full.Message << R.Pruned.Message
                    << "\n";
          return 1;
        }
      return 0;
    }

    if (*ScoreCmd) {
      std::vector<BenchRecord> Records = loadResults(ScoreFile);
      std::cout << formatReport(Records);
      return 0;
    }

    if (*Gen) {
      fs::create_directories(GenOut);
      SolveFn Solver = makeSolver(G);
      SuiteConfig Cfg = GenCfg;
      Cfg.Seed = G.Seed;
      std::size_t Want = Cfg.Count, Kept = 0;
      // Draw ten times the wanted count and keep those inside the window.
      Cfg.Count = Want * 10;
      for (const GeneratedProblem &P : generateSuite(Gr, Cfg)) {
        if (Kept == Want)
          break;
        if (GenMax > 0) {
          TimedRun T = timeSolver(Solver, P.Named.Problem, GenMax, 1);
          if (T.TimedOut || T.Seconds < GenMin)
            continue;
          char Buf[128];
          std::snprintf(Buf, sizeof(Buf), "%-24s %.3f s", P.Named.Id.c_str(),
                        T.Seconds);
          progress(Buf);
        }
        std::ofstream OS(fs::path(GenOut) / (P.Named.Id + ".sl"));
        OS << printGeneratedProblem(P);
        ++Kept;
      }
      progress("wrote " + std::to_string(Kept) + " problems to " + GenOut);
      return Kept == Want ? 0 : 1;
    }
  } catch (const std::exception &E) {
    std::cerr << "grt: " << E.what() << "\n";
    return 2;
  }
  return 0;
}
