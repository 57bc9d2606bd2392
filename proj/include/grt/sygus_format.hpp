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

// SyGuS-lite: a strict subset of the SyGuS v1 surface syntax for PBE string
// problems. Accepted commands are set-logic SLIA, synth-fun with an explicit
// grammar, declare-var, constraint (= (f lit...) lit) and check-synth.
// Anything else is rejected with a ParseError.
//
// Nonterminals of the same sort are merged, so the normalized form printed
// by printProblem has at most one nonterminal per sort (Start, ntInt,
// ntBool).

#ifndef GRT_SYGUS_FORMAT_HPP
#define GRT_SYGUS_FORMAT_HPP

#include "grt/core.hpp"
#include "grt/sexpr.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace grt {

SygusProblem parseProblem(std::string_view Text);
std::string printProblem(const SygusProblem &P);

struct ProblemFile {
  std::filesystem::path Path;
  SygusProblem Parsed;

  const std::string &functionName() const { return Parsed.FunctionName; }
  /// File stem, used as the benchmark id.
  std::string id() const { return Path.stem().string(); }
  NamedProblem named() const { return {id(), Parsed}; }
};

ProblemFile loadProblemFile(const std::filesystem::path &Path);
std::vector<ProblemFile> loadProblemDir(const std::filesystem::path &Dir);

/// SMT-LIB rendering of a term, e.g. (str.++ x0 "a").
std::string printTerm(const ProgramAst &P, const std::vector<InputVar> &Vars);

/// (define-fun <name> ((x0 String)...) String <body>)
std::string printSolution(const ProgramAst &P, std::string_view FnName,
                          const std::vector<InputVar> &Vars);
std::string printSolution(const ProgramAst &P, std::string_view FnName);

/// Parses a term over the given variables. Terminal names are resolved
/// against the catalog, not a particular grammar.
ProgramAst parseTerm(const SExpr &E, const std::vector<InputVar> &Vars);
ProgramAst parseTerm(std::string_view Text, const std::vector<InputVar> &Vars);

/// Finds the first (define-fun ...) in \p Text and returns its body. The
/// define-fun's parameters are bound positionally to \p Vars. Throws
/// ParseError when no well-formed definition is present.
ProgramAst parseSolution(std::string_view Text,
                         const std::vector<InputVar> &Vars);

} // namespace grt

#endif // GRT_SYGUS_FORMAT_HPP
