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

// Benchmark harness: full-grammar baseline against pruned runs, with the
// competition-style score and a JSONL results file.

#ifndef GRT_BENCH_HPP
#define GRT_BENCH_HPP

#include "grt/enumerator.hpp"
#include "grt/neural.hpp"
#include "grt/pruner.hpp"

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace grt {

enum class Mode { Baseline, Grt, Grtc };

std::string_view modeName(Mode M);
/// Throws Error for anything but baseline, grt or grtc.
Mode parseMode(std::string_view Name);

enum class Outcome { Solved, Timeout, Error };

std::string_view outcomeName(Outcome O);

/// One side (full or pruned) of a benchmark run.
struct RunRecord {
  Outcome Status = Outcome::Timeout;
  /// Median wall time; the budget for a timeout.
  double Seconds = 0.0;
  /// Program size, 0 unless solved.
  std::size_t Size = 0;
  std::string Program;
  std::string Message;

  bool solved() const { return Status == Outcome::Solved; }
  bool operator==(const RunRecord &) const = default;
};

struct BenchRecord {
  std::string Id;
  Mode RunMode = Mode::Baseline;
  double TimeoutSeconds = 0.0;
  RunRecord Full;
  RunRecord Pruned;
  std::vector<std::string> Removed;
  std::vector<std::string> Candidates;
  std::vector<double> CandidateSavings;
  std::map<std::string, std::size_t> Votes;
  /// Set when the pruned run needed the full grammar.
  bool UsedFallback = false;

  bool crashed() const {
    return Full.Status == Outcome::Error || Pruned.Status == Outcome::Error;
  }
  bool operator==(const BenchRecord &) const = default;
};

struct BenchConfig {
  double TimeoutSeconds = 60.0;
  /// Reduced-grammar budget before falling back; >= the timeout disables
  /// the fallback.
  double FallbackSeconds = 1.0;
  std::size_t Repeats = 3;
  double Threshold = 0.5;
  const ModelWeights *Weights = nullptr;
  const SavingsTable *Savings = nullptr;
  SolveFn Solver;
  /// Worker threads; capped to hardware threads minus one, at least one.
  std::size_t Jobs = 1;
  std::function<void(const BenchRecord &)> OnRecord;
};

/// Runs every problem in \p Problems. Baseline times come from
/// \p Baseline when it has a record with the same id, so several modes can
/// share one baseline measurement. Per-benchmark failures are recorded,
/// never thrown.
std::vector<BenchRecord>
runSuite(const std::vector<NamedProblem> &Problems, Mode M,
         const BenchConfig &Cfg,
         const std::vector<BenchRecord> *Baseline = nullptr);

/// Decision the pruned side of \p M makes for \p P. Baseline removes
/// nothing.
PruneDecision pruneFor(const SygusProblem &P, Mode M, const BenchConfig &Cfg);

/// Picks the fallback point from reduced and full timings of \p Problems
/// under the GRT decision.
double calibrateFallback(const std::vector<NamedProblem> &Problems,
                         const BenchConfig &Cfg,
                         std::span<const double> Grid);

struct Score {
  std::size_t N = 0;
  std::size_t F = 0;
  std::size_t S = 0;
  std::size_t Total = 0;

  bool operator==(const Score &) const = default;
};

enum class Side { Full, Pruned };

/// Speed points max(0, 6 - floor(log10(max(t, 1ms) / 1ms))) and size points
/// max(0, 5 - floor(log10(max(size, 1)))) per solved benchmark;
/// total = 5N + 3F + S.
Score score(const std::vector<BenchRecord> &Records, Side S = Side::Pruned);
std::size_t speedPoints(double Seconds);
std::size_t sizePoints(std::size_t Size);

struct SuiteTotals {
  double FullSeconds = 0.0;
  double PrunedSeconds = 0.0;
  /// Geometric mean of t_full / t_pruned.
  double GeoMeanSpeedup = 1.0;
  std::size_t Counted = 0;
  std::size_t NewFailures = 0;
  std::size_t NewlySolved = 0;

  /// Percentage drop from full to pruned time.
  double reductionPercent() const;
};

/// Sums over the records whose baseline solved.
SuiteTotals totals(const std::vector<BenchRecord> &Records);

/// Table with one row per record and a totals block.
std::string formatReport(const std::vector<BenchRecord> &Records);

inline constexpr int ResultsFormatVersion = 1;

void writeResults(std::ostream &OS, const std::vector<BenchRecord> &Records,
                  const std::vector<std::string> &Terminals);
std::vector<BenchRecord> readResults(std::istream &IS);
void saveResults(const std::filesystem::path &Path,
                 const std::vector<BenchRecord> &Records,
                 const std::vector<std::string> &Terminals);
std::vector<BenchRecord> loadResults(const std::filesystem::path &Path);

} // namespace grt

#endif // GRT_BENCH_HPP
