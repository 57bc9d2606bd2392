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

// Newline-delimited JSON files. The first line is a header object carrying
// the schema name, the format version and the terminal ordering; every
// following line is one record.

#ifndef GRT_DATASET_IO_HPP
#define GRT_DATASET_IO_HPP

#include "grt/datagen.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace grt {

inline constexpr int DatasetFormatVersion = 1;

struct CritDataset {
  std::vector<std::string> Terminals;
  std::vector<CritSample> Samples;
};

struct TimeDataset {
  std::vector<std::string> Terminals;
  std::vector<TimeSample> Samples;
};

void writeCritDataset(std::ostream &OS, const CritDataset &D);
CritDataset readCritDataset(std::istream &IS);
void writeTimeDataset(std::ostream &OS, const TimeDataset &D);
TimeDataset readTimeDataset(std::istream &IS);

void saveCritDataset(const std::filesystem::path &Path, const CritDataset &D);
CritDataset loadCritDataset(const std::filesystem::path &Path);
void saveTimeDataset(const std::filesystem::path &Path, const TimeDataset &D);
TimeDataset loadTimeDataset(const std::filesystem::path &Path);

} // namespace grt

#endif // GRT_DATASET_IO_HPP
