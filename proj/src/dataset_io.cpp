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

#include "grt/dataset_io.hpp"
#include "jsonl.hpp"

#include <fstream>

namespace grt {

using nlohmann::json;

void writeCritDataset(std::ostream &OS, const CritDataset &D) {
  jsonl::writeHeader(OS, "grt.crit", DatasetFormatVersion, D.Terminals);
  for (const CritSample &S : D.Samples) {
    if (S.Label.size() != D.Terminals.size())
      throw FormatError("label length does not match the terminal list");
    json Label = json::array();
    for (std::uint8_t B : S.Label)
      Label.push_back(B ? 1 : 0);
    jsonl::writeLine(OS, json{{"inputs", S.Constraint.Inputs},
                              {"output", S.Constraint.Output},
                              {"label", std::move(Label)},
                              {"program_id", S.ProgramId},
                              {"program", S.Program}});
  }
}

CritDataset readCritDataset(std::istream &IS) {
  jsonl::Reader R(IS, "grt.crit", DatasetFormatVersion);
  CritDataset D;
  D.Terminals = R.terminals();
  while (auto J = R.next()) {
    CritSample S;
    jsonl::get(*J, "inputs", S.Constraint.Inputs, R);
    jsonl::get(*J, "output", S.Constraint.Output, R);
    std::vector<int> Label;
    jsonl::get(*J, "label", Label, R);
    if (Label.size() != D.Terminals.size())
      R.fail("label length does not match the terminal list");
    for (int B : Label) {
      if (B != 0 && B != 1)
        R.fail("label bits must be 0 or 1");
      S.Label.push_back(static_cast<std::uint8_t>(B));
    }
    jsonl::get(*J, "program_id", S.ProgramId, R);
    jsonl::get(*J, "program", S.Program, R);
    D.Samples.push_back(std::move(S));
  }
  return D;
}

void writeTimeDataset(std::ostream &OS, const TimeDataset &D) {
  jsonl::writeHeader(OS, "grt.time", DatasetFormatVersion, D.Terminals);
  for (const TimeSample &S : D.Samples)
    jsonl::writeLine(OS, json{{"terminal", S.Terminal},
                              {"problem_id", S.ProblemId},
                              {"t_full_s", S.FullSeconds},
                              {"t_dropped_s", S.DroppedSeconds},
                              {"delta_s", S.DeltaSeconds},
                              {"full_timed_out", S.FullTimedOut},
                              {"dropped_timed_out", S.DroppedTimedOut}});
}

TimeDataset readTimeDataset(std::istream &IS) {
  jsonl::Reader R(IS, "grt.time", DatasetFormatVersion);
  TimeDataset D;
  D.Terminals = R.terminals();
  while (auto J = R.next()) {
    TimeSample S;
    jsonl::get(*J, "terminal", S.Terminal, R);
    jsonl::get(*J, "problem_id", S.ProblemId, R);
    jsonl::get(*J, "t_full_s", S.FullSeconds, R);
    jsonl::get(*J, "t_dropped_s", S.DroppedSeconds, R);
    jsonl::get(*J, "delta_s", S.DeltaSeconds, R);
    jsonl::get(*J, "full_timed_out", S.FullTimedOut, R);
    jsonl::get(*J, "dropped_timed_out", S.DroppedTimedOut, R);
    D.Samples.push_back(std::move(S));
  }
  return D;
}

void saveCritDataset(const std::filesystem::path &Path, const CritDataset &D) {
  std::ofstream OS = jsonl::openOut(Path);
  writeCritDataset(OS, D);
}

CritDataset loadCritDataset(const std::filesystem::path &Path) {
  std::ifstream IS = jsonl::openIn(Path);
  return readCritDataset(IS);
}

void saveTimeDataset(const std::filesystem::path &Path, const TimeDataset &D) {
  std::ofstream OS = jsonl::openOut(Path);
  writeTimeDataset(OS, D);
}

TimeDataset loadTimeDataset(const std::filesystem::path &Path) {
  std::ifstream IS = jsonl::openIn(Path);
  return readTimeDataset(IS);
}

} // namespace grt
