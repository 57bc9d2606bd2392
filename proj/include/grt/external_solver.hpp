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

#ifndef GRT_EXTERNAL_SOLVER_HPP
#define GRT_EXTERNAL_SOLVER_HPP

#include "grt/enumerator.hpp"

#include <string>

namespace grt {

/// Runs an external SyGuS solver on \p P. The problem is written to a
/// temporary file whose quoted path replaces every "{file}" or "{}" in \p CommandTemplate
/// (or is appended when there is no placeholder); the command runs under
/// /bin/sh and is killed when \p BudgetSeconds elapses.
///
/// The first define-fun on stdout is parsed and checked against every
/// constraint. Throws SolverCrash when the process fails without an answer,
/// UnparseableOutput when no definition can be read, and WrongAnswer when the
/// definition violates a constraint.
SynthesisResult solveWithExternal(const SygusProblem &P,
                                  const std::string &CommandTemplate,
                                  double BudgetSeconds);

inline SynthesisResult solveWithExternal(const SygusProblem &P,
                                         const std::string &CommandTemplate) {
  return solveWithExternal(P, CommandTemplate, P.TimeoutSeconds);
}

SolveFn externalSolver(std::string CommandTemplate);

} // namespace grt

#endif // GRT_EXTERNAL_SOLVER_HPP
