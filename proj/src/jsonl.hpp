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

// Shared plumbing for the header-plus-records JSONL files.

#ifndef GRT_SRC_JSONL_HPP
#define GRT_SRC_JSONL_HPP

#include "grt/errors.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace grt::jsonl {

inline void writeLine(std::ostream &OS, const nlohmann::json &J) {
  try {
    OS << J.dump() << '\n';
  } catch (const nlohmann::json::exception &E) {
    throw FormatError(std::string("cannot serialize record: ") + E.what());
  }
}

inline void writeHeader(std::ostream &OS, const std::string &Schema,
                        int Version, const std::vector<std::string> &Terminals,
                        nlohmann::json Extra = nlohmann::json::object()) {
  nlohmann::json H{{"schema", Schema},
                   {"version", Version},
                   {"terminals", Terminals}};
  for (auto It = Extra.begin(); It != Extra.end(); ++It)
    H[It.key()] = It.value();
  writeLine(OS, H);
}

class Reader {
public:
  Reader(std::istream &IS, const std::string &Schema, int Version) : IS(IS) {
    auto H = next();
    if (!H)
      fail("missing header line");
    Header = std::move(*H);
    if (!Header.is_object() || Header.value("schema", "") != Schema)
      fail("expected schema '" + Schema + "'");
    if (!Header.contains("version") || Header["version"] != Version)
      fail("unsupported format version");
    try {
      Terminals = Header.at("terminals").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception &) {
      fail("header lacks a terminal list");
    }
  }

  const nlohmann::json &header() const { return Header; }
  const std::vector<std::string> &terminals() const { return Terminals; }

  /// Next non-empty line, parsed; nullopt at end of input.
  std::optional<nlohmann::json> next() {
    std::string Line;
    while (std::getline(IS, Line)) {
      ++LineNo;
      if (Line.empty())
        continue;
      try {
        return nlohmann::json::parse(Line);
      } catch (const nlohmann::json::parse_error &E) {
        fail(std::string("malformed JSON: ") + E.what());
      }
    }
    return std::nullopt;
  }

  [[noreturn]] void fail(const std::string &Msg) const {
    throw FormatError("line " + std::to_string(LineNo) + ": " + Msg);
  }

private:
  std::istream &IS;
  std::size_t LineNo = 0;
  nlohmann::json Header;
  std::vector<std::string> Terminals;
};

template <typename T>
void get(const nlohmann::json &J, const char *Key, T &Out, const Reader &R) {
  try {
    J.at(Key).get_to(Out);
  } catch (const nlohmann::json::exception &) {
    R.fail(std::string("missing or mistyped field '") + Key + "'");
  }
}

inline std::ofstream openOut(const std::filesystem::path &Path) {
  std::ofstream OS(Path, std::ios::binary);
  if (!OS)
    throw FormatError("cannot open " + Path.string() + " for writing");
  return OS;
}

inline std::ifstream openIn(const std::filesystem::path &Path) {
  std::ifstream IS(Path, std::ios::binary);
  if (!IS)
    throw FormatError("cannot open " + Path.string());
  return IS;
}

} // namespace grt::jsonl

#endif // GRT_SRC_JSONL_HPP
