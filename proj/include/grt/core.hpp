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

// Grammar, program and constraint types for PBE string synthesis, plus the
// reference interpreter every other component is checked against.

#ifndef GRT_CORE_HPP
#define GRT_CORE_HPP

#include "grt/errors.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace grt {

enum class Sort : std::uint8_t { String, Int, Bool };

std::string_view sortName(Sort S);
std::optional<Sort> parseSort(std::string_view Name);

// Component functions known to the interpreter. The enumeration order is the
// canonical terminal ordering used for label vectors and model outputs.
enum class Op : std::uint8_t {
  Concat,   // str.++
  Replace,  // str.replace
  At,       // str.at
  Substr,   // str.substr
  Len,      // str.len
  IndexOf,  // str.indexof
  ToInt,    // str.to.int
  FromInt,  // int.to.str
  PrefixOf, // str.prefixof
  SuffixOf, // str.suffixof
  Contains, // str.contains
  Ite,      // ite (Bool String String)
  Add,      // +
  Sub,      // -
  IntEq,    // = (Int Int)
};

struct TerminalSymbol {
  std::string Name;
  std::vector<Sort> ArgSorts;
  Sort RetSort = Sort::String;
  Op Opcode = Op::Concat;

  std::size_t arity() const { return ArgSorts.size(); }
  bool operator==(const TerminalSymbol &) const = default;
};

/// All terminals the interpreter understands, in canonical order.
const std::vector<TerminalSymbol> &terminalCatalog();

/// Looks up a catalog terminal by its SMT-LIB name. Accepts the legacy
/// spellings str.to.int / int.to.str as well as str.to_int / str.from_int.
const TerminalSymbol &lookupTerminal(std::string_view Name);

struct InputVar {
  std::string Name;
  Sort VarSort = Sort::String;
  bool operator==(const InputVar &) const = default;
};

/// A synthesis grammar: a duplicate-free set of terminals (kept in canonical
/// order), literal pools per sort, and the input variables of the function
/// being synthesized. Immutable once built.
class Grammar {
public:
  Grammar() = default;
  Grammar(std::vector<TerminalSymbol> Terminals, Sort StartSort,
          std::vector<std::string> StringLiterals,
          std::vector<std::int64_t> IntLiterals,
          std::vector<bool> BoolLiterals, std::vector<InputVar> InputVars);

  const std::vector<TerminalSymbol> &terminals() const { return Terminals; }
  Sort startSort() const { return StartSort; }
  const std::vector<std::string> &stringLiterals() const {
    return StringLiterals;
  }
  const std::vector<std::int64_t> &intLiterals() const { return IntLiterals; }
  const std::vector<bool> &boolLiterals() const { return BoolLiterals; }
  const std::vector<InputVar> &inputVars() const { return InputVars; }

  /// The set projection: terminal names in canonical order.
  std::vector<std::string> terminalNames() const;
  bool hasTerminal(std::string_view Name) const;
  std::optional<std::size_t> terminalIndex(std::string_view Name) const;

  /// Copy of this grammar without terminal \p Name. Throws UnknownTerminal
  /// when the terminal is not present.
  Grammar dropTerminal(std::string_view Name) const;

  bool operator==(const Grammar &) const = default;

private:
  std::vector<TerminalSymbol> Terminals;
  Sort StartSort = Sort::String;
  std::vector<std::string> StringLiterals;
  std::vector<std::int64_t> IntLiterals;
  std::vector<bool> BoolLiterals;
  std::vector<InputVar> InputVars;
};

inline Grammar drop_terminal(const Grammar &G, std::string_view Name) {
  return G.dropTerminal(Name);
}

/// The full PBE-Strings style grammar over one String input named x0.
Grammar defaultGrammar();
Grammar defaultGrammar(std::vector<InputVar> Vars);

class ProgramAst {
public:
  enum class Kind : std::uint8_t { Apply, InputVar, StrLit, IntLit, BoolLit };

  /// Builds an application node, checking child sorts against the terminal
  /// signature. Throws TypeError on mismatch.
  static ProgramAst apply(const TerminalSymbol &T,
                          std::vector<ProgramAst> Children);
  static ProgramAst apply(std::string_view Name,
                          std::vector<ProgramAst> Children);
  static ProgramAst var(std::string Name, std::size_t Index,
                        Sort VarSort = Sort::String);
  static ProgramAst str(std::string Value);
  static ProgramAst integer(std::int64_t Value);
  static ProgramAst boolean(bool Value);

  Kind kind() const { return NodeKind; }
  Sort sort() const { return NodeSort; }
  Op op() const { return Opcode; }
  /// Terminal name for Apply nodes, variable name for InputVar nodes.
  const std::string &name() const { return Name; }
  std::size_t varIndex() const { return VarIndex; }
  const std::string &strValue() const { return StrValue; }
  std::int64_t intValue() const { return IntValue; }
  bool boolValue() const { return IntValue != 0; }
  const std::vector<ProgramAst> &children() const { return Children; }

  bool operator==(const ProgramAst &) const = default;

private:
  ProgramAst() = default;

  Kind NodeKind = Kind::StrLit;
  Sort NodeSort = Sort::String;
  Op Opcode = Op::Concat;
  std::string Name;
  std::size_t VarIndex = 0;
  std::string StrValue;
  std::int64_t IntValue = 0;
  std::vector<ProgramAst> Children;
};

using Value = std::variant<std::string, std::int64_t, bool>;

Sort sortOf(const Value &V);

struct IoConstraint {
  std::vector<std::string> Inputs;
  std::string Output;
  bool operator==(const IoConstraint &) const = default;
};

struct SygusProblem {
  std::string FunctionName = "f";
  Grammar TheGrammar;
  std::vector<IoConstraint> Constraints;
  double TimeoutSeconds = 3600.0;

  bool operator==(const SygusProblem &) const = default;
};

/// A problem with a stable identifier (file stem or generated id).
struct NamedProblem {
  std::string Id;
  SygusProblem Problem;
};

/// Evaluates \p P on \p Inputs. Total for any byte strings; throws TypeError
/// only when the program references a variable the inputs do not provide.
Value evaluate(const ProgramAst &P, std::span<const std::string> Inputs);

/// As above, but additionally requires exactly \p ExpectedArity inputs.
Value evaluate(const ProgramAst &P, std::span<const std::string> Inputs,
               std::size_t ExpectedArity);

/// P |- c: byte equality of the program output with the expected output.
bool satisfies(const ProgramAst &P, const IoConstraint &C);
bool satisfiesAll(const ProgramAst &P, std::span<const IoConstraint> Cs);

/// Number of AST nodes.
std::size_t programSize(const ProgramAst &P);

/// Names of the terminals applied anywhere in \p P.
std::set<std::string> terminalOccurrences(const ProgramAst &P);

/// Checks that every terminal and variable \p P uses exists in \p G.
bool programInGrammar(const ProgramAst &P, const Grammar &G);

} // namespace grt

#endif // GRT_CORE_HPP
