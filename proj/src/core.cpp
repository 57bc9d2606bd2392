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

#include "grt/core.hpp"
#include "grt/string_theory.hpp"

#include <algorithm>

namespace grt {

std::string_view sortName(Sort S) {
  switch (S) {
  case Sort::String:
    return "String";
  case Sort::Int:
    return "Int";
  case Sort::Bool:
    return "Bool";
  }
  return "?";
}

std::optional<Sort> parseSort(std::string_view Name) {
  if (Name == "String")
    return Sort::String;
  if (Name == "Int")
    return Sort::Int;
  if (Name == "Bool")
    return Sort::Bool;
  return std::nullopt;
}

const std::vector<TerminalSymbol> &terminalCatalog() {
  using S = Sort;
  static const std::vector<TerminalSymbol> Catalog = {
      {"str.++", {S::String, S::String}, S::String, Op::Concat},
      {"str.replace", {S::String, S::String, S::String}, S::String,
       Op::Replace},
      {"str.at", {S::String, S::Int}, S::String, Op::At},
      {"str.substr", {S::String, S::Int, S::Int}, S::String, Op::Substr},
      {"str.len", {S::String}, S::Int, Op::Len},
      {"str.indexof", {S::String, S::String, S::Int}, S::Int, Op::IndexOf},
      {"str.to.int", {S::String}, S::Int, Op::ToInt},
      {"int.to.str", {S::Int}, S::String, Op::FromInt},
      {"str.prefixof", {S::String, S::String}, S::Bool, Op::PrefixOf},
      {"str.suffixof", {S::String, S::String}, S::Bool, Op::SuffixOf},
      {"str.contains", {S::String, S::String}, S::Bool, Op::Contains},
      {"ite", {S::Bool, S::String, S::String}, S::String, Op::Ite},
      {"+", {S::Int, S::Int}, S::Int, Op::Add},
      {"-", {S::Int, S::Int}, S::Int, Op::Sub},
      {"=", {S::Int, S::Int}, S::Bool, Op::IntEq},
  };
  return Catalog;
}

const TerminalSymbol &lookupTerminal(std::string_view Name) {
  if (Name == "str.to_int")
    Name = "str.to.int";
  else if (Name == "str.from_int")
    Name = "int.to.str";
  for (const TerminalSymbol &T : terminalCatalog())
    if (T.Name == Name)
      return T;
  throw UnknownTerminal(std::string(Name));
}

Grammar::Grammar(std::vector<TerminalSymbol> Terms, Sort Start,
                 std::vector<std::string> StrLits,
                 std::vector<std::int64_t> IntLits, std::vector<bool> BoolLits,
                 std::vector<InputVar> Vars)
    : Terminals(std::move(Terms)), StartSort(Start),
      StringLiterals(std::move(StrLits)), IntLiterals(std::move(IntLits)),
      BoolLiterals(std::move(BoolLits)), InputVars(std::move(Vars)) {
  std::stable_sort(Terminals.begin(), Terminals.end(),
                   [](const TerminalSymbol &A, const TerminalSymbol &B) {
                     return A.Opcode < B.Opcode;
                   });
  for (std::size_t I = 1; I < Terminals.size(); ++I)
    if (Terminals[I].Name == Terminals[I - 1].Name)
      throw Error("duplicate terminal '" + Terminals[I].Name + "' in grammar");
  for (const InputVar &V : InputVars)
    if (V.VarSort != Sort::String)
      throw TypeError("input variable '" + V.Name + "' must be a String");
}

std::vector<std::string> Grammar::terminalNames() const {
  std::vector<std::string> Names;
  Names.reserve(Terminals.size());
  for (const TerminalSymbol &T : Terminals)
    Names.push_back(T.Name);
  return Names;
}

bool Grammar::hasTerminal(std::string_view Name) const {
  return terminalIndex(Name).has_value();
}

std::optional<std::size_t> Grammar::terminalIndex(std::string_view Name) const {
  for (std::size_t I = 0; I < Terminals.size(); ++I)
    if (Terminals[I].Name == Name)
      return I;
  return std::nullopt;
}

Grammar Grammar::dropTerminal(std::string_view Name) const {
  auto Idx = terminalIndex(Name);
  if (!Idx)
    throw UnknownTerminal(std::string(Name));
  Grammar Out = *this;
  Out.Terminals.erase(Out.Terminals.begin() +
                      static_cast<std::ptrdiff_t>(*Idx));
  return Out;
}

Grammar defaultGrammar(std::vector<InputVar> Vars) {
  return Grammar(terminalCatalog(), Sort::String, {"", " ", "-", "."}, {0, 1},
                 {}, std::move(Vars));
}

Grammar defaultGrammar() { return defaultGrammar({{"x0", Sort::String}}); }

ProgramAst ProgramAst::apply(const TerminalSymbol &T,
                             std::vector<ProgramAst> Children) {
  if (Children.size() != T.arity())
    throw TypeError(T.Name + " expects " + std::to_string(T.arity()) +
                    " arguments, got " + std::to_string(Children.size()));
  for (std::size_t I = 0; I < Children.size(); ++I)
    if (Children[I].sort() != T.ArgSorts[I])
      throw TypeError(T.Name + " argument " + std::to_string(I + 1) +
                      " must be " + std::string(sortName(T.ArgSorts[I])) +
                      ", got " + std::string(sortName(Children[I].sort())));
  ProgramAst P;
  P.NodeKind = Kind::Apply;
  P.NodeSort = T.RetSort;
  P.Opcode = T.Opcode;
  P.Name = T.Name;
  P.Children = std::move(Children);
  return P;
}

ProgramAst ProgramAst::apply(std::string_view Name,
                             std::vector<ProgramAst> Children) {
  return apply(lookupTerminal(Name), std::move(Children));
}

ProgramAst ProgramAst::var(std::string Name, std::size_t Index, Sort VarSort) {
  ProgramAst P;
  P.NodeKind = Kind::InputVar;
  P.NodeSort = VarSort;
  P.Name = std::move(Name);
  P.VarIndex = Index;
  return P;
}

ProgramAst ProgramAst::str(std::string Value) {
  ProgramAst P;
  P.NodeKind = Kind::StrLit;
  P.NodeSort = Sort::String;
  P.StrValue = std::move(Value);
  return P;
}

ProgramAst ProgramAst::integer(std::int64_t Value) {
  ProgramAst P;
  P.NodeKind = Kind::IntLit;
  P.NodeSort = Sort::Int;
  P.IntValue = Value;
  return P;
}

ProgramAst ProgramAst::boolean(bool Value) {
  ProgramAst P;
  P.NodeKind = Kind::BoolLit;
  P.NodeSort = Sort::Bool;
  P.IntValue = Value ? 1 : 0;
  return P;
}

Sort sortOf(const Value &V) {
  switch (V.index()) {
  case 0:
    return Sort::String;
  case 1:
    return Sort::Int;
  default:
    return Sort::Bool;
  }
}

namespace {

Value eval(const ProgramAst &P, std::span<const std::string> In) {
  switch (P.kind()) {
  case ProgramAst::Kind::InputVar:
    if (P.varIndex() >= In.size())
      throw TypeError("program reads variable '" + P.name() + "' (index " +
                      std::to_string(P.varIndex()) + ") but only " +
                      std::to_string(In.size()) + " inputs were given");
    return In[P.varIndex()];
  case ProgramAst::Kind::StrLit:
    return P.strValue();
  case ProgramAst::Kind::IntLit:
    return P.intValue();
  case ProgramAst::Kind::BoolLit:
    return P.boolValue();
  case ProgramAst::Kind::Apply:
    break;
  }

  const auto &Ch = P.children();
  auto S = [&](std::size_t I) { return std::get<std::string>(eval(Ch[I], In)); };
  auto N = [&](std::size_t I) { return std::get<std::int64_t>(eval(Ch[I], In)); };
  auto B = [&](std::size_t I) { return std::get<bool>(eval(Ch[I], In)); };

  std::string Out;
  switch (P.op()) {
  case Op::Concat:
    strings::concat(S(0), S(1), Out);
    return Out;
  case Op::Replace:
    strings::replace(S(0), S(1), S(2), Out);
    return Out;
  case Op::At:
    strings::at(S(0), N(1), Out);
    return Out;
  case Op::Substr:
    strings::substr(S(0), N(1), N(2), Out);
    return Out;
  case Op::Len:
    return strings::length(S(0));
  case Op::IndexOf:
    return strings::indexof(S(0), S(1), N(2));
  case Op::ToInt:
    return strings::toInt(S(0));
  case Op::FromInt:
    strings::fromInt(N(0), Out);
    return Out;
  case Op::PrefixOf:
    return strings::prefixof(S(0), S(1));
  case Op::SuffixOf:
    return strings::suffixof(S(0), S(1));
  case Op::Contains:
    return strings::contains(S(0), S(1));
  case Op::Ite:
    return B(0) ? eval(Ch[1], In) : eval(Ch[2], In);
  case Op::Add:
    return strings::add(N(0), N(1));
  case Op::Sub:
    return strings::sub(N(0), N(1));
  case Op::IntEq:
    return N(0) == N(1);
  }
  return Out;
}

} // namespace

Value evaluate(const ProgramAst &P, std::span<const std::string> Inputs) {
  return eval(P, Inputs);
}

Value evaluate(const ProgramAst &P, std::span<const std::string> Inputs,
               std::size_t ExpectedArity) {
  if (Inputs.size() != ExpectedArity)
    throw TypeError("expected " + std::to_string(ExpectedArity) +
                    " inputs, got " + std::to_string(Inputs.size()));
  return eval(P, Inputs);
}

bool satisfies(const ProgramAst &P, const IoConstraint &C) {
  Value V = eval(P, C.Inputs);
  const auto *Str = std::get_if<std::string>(&V);
  return Str && *Str == C.Output;
}

bool satisfiesAll(const ProgramAst &P, std::span<const IoConstraint> Cs) {
  return std::all_of(Cs.begin(), Cs.end(),
                     [&](const IoConstraint &C) { return satisfies(P, C); });
}

std::size_t programSize(const ProgramAst &P) {
  std::size_t N = 1;
  for (const ProgramAst &C : P.children())
    N += programSize(C);
  return N;
}

namespace {
void collectTerminals(const ProgramAst &P, std::set<std::string> &Out) {
  if (P.kind() == ProgramAst::Kind::Apply)
    Out.insert(P.name());
  for (const ProgramAst &C : P.children())
    collectTerminals(C, Out);
}
} // namespace

std::set<std::string> terminalOccurrences(const ProgramAst &P) {
  std::set<std::string> Out;
  collectTerminals(P, Out);
  return Out;
}

bool programInGrammar(const ProgramAst &P, const Grammar &G) {
  switch (P.kind()) {
  case ProgramAst::Kind::InputVar:
    return P.varIndex() < G.inputVars().size();
  case ProgramAst::Kind::Apply:
    if (!G.hasTerminal(P.name()))
      return false;
    return std::all_of(
        P.children().begin(), P.children().end(),
        [&](const ProgramAst &C) { return programInGrammar(C, G); });
  default:
    return true;
  }
}

} // namespace grt
