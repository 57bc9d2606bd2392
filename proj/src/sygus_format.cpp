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

#include "grt/sygus_format.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace grt {

namespace {

[[noreturn]] void fail(const SExpr &At, const std::string &Msg) {
  throw ParseError(At.Line, At.Column, Msg);
}

std::int64_t parseNumeral(const SExpr &E) {
  std::int64_t V = 0;
  auto [Ptr, Ec] =
      std::from_chars(E.Text.data(), E.Text.data() + E.Text.size(), V);
  if (Ec != std::errc() || Ptr != E.Text.data() + E.Text.size())
    fail(E, "integer literal out of range: " + E.Text);
  return V;
}

// Matches the negative literal form (- <numeral>).
bool isNegativeLiteral(const SExpr &E) {
  return E.isCall("-") && E.Items.size() == 2 &&
         E.Items[1].K == SExpr::Kind::Numeral;
}

const SExpr &expectList(const SExpr &E, const std::string &What) {
  if (!E.isList())
    fail(E, "expected " + What);
  return E;
}

const std::string &expectSymbol(const SExpr &E, const std::string &What) {
  if (E.K != SExpr::Kind::Symbol)
    fail(E, "expected " + What);
  return E.Text;
}

Sort expectSort(const SExpr &E) {
  auto S = parseSort(expectSymbol(E, "sort"));
  if (!S)
    fail(E, "unsupported sort '" + E.Text + "'");
  return *S;
}

struct GrammarBuilder {
  std::vector<TerminalSymbol> Terminals;
  std::vector<std::string> StrLits;
  std::vector<std::int64_t> IntLits;
  std::vector<bool> BoolLits;

  template <typename T> static void addUnique(std::vector<T> &V, T X) {
    if (std::find(V.begin(), V.end(), X) == V.end())
      V.push_back(std::move(X));
  }
};

Grammar parseGrammar(const SExpr &Rules, const std::vector<InputVar> &Params,
                     Sort RetSort) {
  expectList(Rules, "grammar rule list");
  if (Rules.Items.empty())
    fail(Rules, "grammar must declare at least one nonterminal");

  std::map<std::string, Sort> NtSorts;
  for (const SExpr &Rule : Rules.Items) {
    expectList(Rule, "(<nonterminal> <sort> (<production>...))");
    if (Rule.Items.size() != 3)
      fail(Rule, "grammar rule must be (<nonterminal> <sort> (<production>...))");
    const std::string &Nt = expectSymbol(Rule.Items[0], "nonterminal name");
    if (!NtSorts.emplace(Nt, expectSort(Rule.Items[1])).second)
      fail(Rule.Items[0], "duplicate nonterminal '" + Nt + "'");
  }
  Sort Start = NtSorts.at(Rules.Items[0].Items[0].Text);
  if (Start != RetSort)
    fail(Rules.Items[0], "start nonterminal sort does not match function sort");

  GrammarBuilder B;
  for (const SExpr &Rule : Rules.Items) {
    Sort NtSort = NtSorts.at(Rule.Items[0].Text);
    const SExpr &Prods = expectList(Rule.Items[2], "production list");
    for (const SExpr &Prod : Prods.Items) {
      switch (Prod.K) {
      case SExpr::Kind::String:
        if (NtSort != Sort::String)
          fail(Prod, "string literal in a non-String nonterminal");
        GrammarBuilder::addUnique(B.StrLits, Prod.Text);
        continue;
      case SExpr::Kind::Numeral:
        if (NtSort != Sort::Int)
          fail(Prod, "integer literal in a non-Int nonterminal");
        GrammarBuilder::addUnique(B.IntLits, parseNumeral(Prod));
        continue;
      case SExpr::Kind::Symbol: {
        if (Prod.Text == "true" || Prod.Text == "false") {
          if (NtSort != Sort::Bool)
            fail(Prod, "Boolean literal in a non-Bool nonterminal");
          GrammarBuilder::addUnique(B.BoolLits, Prod.Text == "true");
          continue;
        }
        auto Nt = NtSorts.find(Prod.Text);
        if (Nt != NtSorts.end()) {
          if (Nt->second != NtSort)
            fail(Prod, "nonterminal '" + Prod.Text + "' has the wrong sort");
          continue;
        }
        auto Param = std::find_if(Params.begin(), Params.end(),
                                  [&](const InputVar &V) {
                                    return V.Name == Prod.Text;
                                  });
        if (Param == Params.end())
          fail(Prod, "unknown symbol '" + Prod.Text + "' in grammar");
        if (Param->VarSort != NtSort)
          fail(Prod, "variable '" + Prod.Text + "' has the wrong sort");
        continue;
      }
      case SExpr::Kind::List:
        break;
      }
      if (isNegativeLiteral(Prod)) {
        if (NtSort != Sort::Int)
          fail(Prod, "integer literal in a non-Int nonterminal");
        GrammarBuilder::addUnique(B.IntLits, -parseNumeral(Prod.Items[1]));
        continue;
      }
      if (Prod.Items.empty())
        fail(Prod, "empty production");
      const std::string &Name = expectSymbol(Prod.Items[0], "operator");
      const TerminalSymbol &T = lookupTerminal(Name);
      if (T.RetSort != NtSort)
        fail(Prod, "'" + Name + "' does not produce " +
                       std::string(sortName(NtSort)));
      if (Prod.Items.size() - 1 != T.arity())
        fail(Prod, "'" + Name + "' expects " + std::to_string(T.arity()) +
                       " arguments");
      for (std::size_t I = 0; I < T.arity(); ++I) {
        const SExpr &Arg = Prod.Items[I + 1];
        auto Nt = NtSorts.find(expectSymbol(Arg, "nonterminal argument"));
        if (Nt == NtSorts.end())
          fail(Arg, "unknown nonterminal '" + Arg.Text + "'");
        if (Nt->second != T.ArgSorts[I])
          fail(Arg, "argument " + std::to_string(I + 1) + " of '" + Name +
                        "' must be " + std::string(sortName(T.ArgSorts[I])));
      }
      if (std::none_of(B.Terminals.begin(), B.Terminals.end(),
                       [&](const TerminalSymbol &X) { return X.Name == T.Name; }))
        B.Terminals.push_back(T);
    }
  }
  std::sort(B.IntLits.begin(), B.IntLits.end());
  std::sort(B.BoolLits.begin(), B.BoolLits.end());
  return Grammar(std::move(B.Terminals), Start, std::move(B.StrLits),
                 std::move(B.IntLits), std::move(B.BoolLits), Params);
}

std::vector<InputVar> parseParams(const SExpr &List) {
  expectList(List, "parameter list");
  std::vector<InputVar> Vars;
  for (const SExpr &P : List.Items) {
    expectList(P, "(<name> <sort>)");
    if (P.Items.size() != 2)
      fail(P, "parameter must be (<name> <sort>)");
    Sort S = expectSort(P.Items[1]);
    if (S != Sort::String)
      fail(P.Items[1], "only String parameters are supported");
    Vars.push_back({expectSymbol(P.Items[0], "parameter name"), S});
  }
  return Vars;
}

IoConstraint parseConstraint(const SExpr &Cmd, const std::string &Fn,
                             std::size_t Arity) {
  if (Cmd.Items.size() != 2)
    fail(Cmd, "constraint takes one term");
  const SExpr &Eq = Cmd.Items[1];
  if (!Eq.isCall("=") || Eq.Items.size() != 3)
    fail(Eq, "constraint must have the form (= (" + Fn + " <lit>...) <lit>)");
  const SExpr &Call = Eq.Items[1];
  if (!Call.isCall(Fn))
    fail(Call, "left-hand side must apply '" + Fn + "'");
  if (Call.Items.size() - 1 != Arity)
    fail(Call, "'" + Fn + "' expects " + std::to_string(Arity) + " arguments");
  IoConstraint C;
  for (std::size_t I = 1; I < Call.Items.size(); ++I) {
    if (Call.Items[I].K != SExpr::Kind::String)
      fail(Call.Items[I], "constraint inputs must be string literals");
    C.Inputs.push_back(Call.Items[I].Text);
  }
  if (Eq.Items[2].K != SExpr::Kind::String)
    fail(Eq.Items[2], "constraint output must be a string literal");
  C.Output = Eq.Items[2].Text;
  return C;
}

} // namespace

SygusProblem parseProblem(std::string_view Text) {
  std::vector<SExpr> Cmds = readSExprs(Text);
  SygusProblem P;
  bool HaveFun = false;
  for (const SExpr &Cmd : Cmds) {
    if (!Cmd.isList() || Cmd.Items.empty() ||
        Cmd.Items[0].K != SExpr::Kind::Symbol)
      fail(Cmd, "expected a command");
    const std::string &Head = Cmd.Items[0].Text;
    if (Head == "set-logic") {
      if (Cmd.Items.size() != 2 || !Cmd.Items[1].isSymbol("SLIA"))
        fail(Cmd, "only (set-logic SLIA) is supported");
    } else if (Head == "synth-fun") {
      if (HaveFun)
        fail(Cmd, "only one synth-fun is supported");
      if (Cmd.Items.size() != 5)
        fail(Cmd, "synth-fun must be (synth-fun <name> (<params>) <sort> "
                  "(<grammar>))");
      P.FunctionName = expectSymbol(Cmd.Items[1], "function name");
      std::vector<InputVar> Params = parseParams(Cmd.Items[2]);
      Sort Ret = expectSort(Cmd.Items[3]);
      if (Ret != Sort::String)
        fail(Cmd.Items[3], "only String-valued functions are supported");
      P.TheGrammar = parseGrammar(Cmd.Items[4], Params, Ret);
      HaveFun = true;
    } else if (Head == "declare-var") {
      if (Cmd.Items.size() != 3)
        fail(Cmd, "declare-var must be (declare-var <name> <sort>)");
      expectSymbol(Cmd.Items[1], "variable name");
      expectSort(Cmd.Items[2]);
    } else if (Head == "constraint") {
      if (!HaveFun)
        fail(Cmd, "constraint before synth-fun");
      P.Constraints.push_back(parseConstraint(
          Cmd, P.FunctionName, P.TheGrammar.inputVars().size()));
    } else if (Head == "check-synth") {
      if (Cmd.Items.size() != 1)
        fail(Cmd, "check-synth takes no arguments");
    } else {
      fail(Cmd, "unsupported command '" + Head + "'");
    }
  }
  if (!HaveFun)
    throw ParseError(1, 1, "missing synth-fun");
  return P;
}

namespace {

std::string ntName(Sort S) {
  switch (S) {
  case Sort::String:
    return "Start";
  case Sort::Int:
    return "ntInt";
  case Sort::Bool:
    return "ntBool";
  }
  return "Start";
}

std::string printInt(std::int64_t V) {
  if (V < 0)
    return "(- " + std::to_string(0ULL - static_cast<unsigned long long>(V)) +
           ")";
  return std::to_string(V);
}

std::string printParams(const std::vector<InputVar> &Vars) {
  std::string Out = "(";
  for (std::size_t I = 0; I < Vars.size(); ++I) {
    if (I)
      Out += ' ';
    Out += "(" + Vars[I].Name + " " + std::string(sortName(Vars[I].VarSort)) +
           ")";
  }
  return Out + ")";
}

void printTermTo(const ProgramAst &P, const std::vector<InputVar> &Vars,
                 std::string &Out) {
  switch (P.kind()) {
  case ProgramAst::Kind::InputVar:
    Out += P.varIndex() < Vars.size() ? Vars[P.varIndex()].Name : P.name();
    return;
  case ProgramAst::Kind::StrLit:
    Out += quoteString(P.strValue());
    return;
  case ProgramAst::Kind::IntLit:
    Out += printInt(P.intValue());
    return;
  case ProgramAst::Kind::BoolLit:
    Out += P.boolValue() ? "true" : "false";
    return;
  case ProgramAst::Kind::Apply:
    Out += "(" + P.name();
    for (const ProgramAst &C : P.children()) {
      Out += ' ';
      printTermTo(C, Vars, Out);
    }
    Out += ')';
    return;
  }
}

std::size_t maxVarIndex(const ProgramAst &P) {
  std::size_t M = P.kind() == ProgramAst::Kind::InputVar ? P.varIndex() + 1 : 0;
  for (const ProgramAst &C : P.children())
    M = std::max(M, maxVarIndex(C));
  return M;
}

} // namespace

std::string printProblem(const SygusProblem &P) {
  const Grammar &G = P.TheGrammar;
  std::map<Sort, std::vector<std::string>> Prods;
  bool NeedSort[3] = {true, false, false};
  for (const InputVar &V : G.inputVars())
    Prods[V.VarSort].push_back(V.Name);
  for (const std::string &S : G.stringLiterals())
    Prods[Sort::String].push_back(quoteString(S));
  for (std::int64_t V : G.intLiterals())
    Prods[Sort::Int].push_back(printInt(V));
  for (bool V : G.boolLiterals())
    Prods[Sort::Bool].push_back(V ? "true" : "false");
  for (const TerminalSymbol &T : G.terminals()) {
    std::string Prod = "(" + T.Name;
    for (Sort A : T.ArgSorts) {
      Prod += " " + ntName(A);
      NeedSort[static_cast<int>(A)] = true;
    }
    Prods[T.RetSort].push_back(Prod + ")");
    NeedSort[static_cast<int>(T.RetSort)] = true;
  }

  std::ostringstream OS;
  OS << "(set-logic SLIA)\n\n";
  OS << "(synth-fun " << P.FunctionName << " " << printParams(G.inputVars())
     << " " << sortName(G.startSort()) << "\n  (";
  bool First = true;
  for (Sort S : {Sort::String, Sort::Int, Sort::Bool}) {
    if (!NeedSort[static_cast<int>(S)] && Prods[S].empty())
      continue;
    if (!First)
      OS << "\n   ";
    First = false;
    OS << "(" << ntName(S) << " " << sortName(S) << " (";
    for (std::size_t I = 0; I < Prods[S].size(); ++I)
      OS << (I ? " " : "") << Prods[S][I];
    OS << "))";
  }
  OS << "))\n\n";
  for (const InputVar &V : G.inputVars())
    OS << "(declare-var " << V.Name << " " << sortName(V.VarSort) << ")\n";
  if (!G.inputVars().empty())
    OS << "\n";
  for (const IoConstraint &C : P.Constraints) {
    OS << "(constraint (= (" << P.FunctionName;
    for (const std::string &In : C.Inputs)
      OS << " " << quoteString(In);
    OS << ") " << quoteString(C.Output) << "))\n";
  }
  if (!P.Constraints.empty())
    OS << "\n";
  OS << "(check-synth)\n";
  return OS.str();
}

ProblemFile loadProblemFile(const std::filesystem::path &Path) {
  std::ifstream In(Path, std::ios::binary);
  if (!In)
    throw Error("cannot open " + Path.string());
  std::stringstream SS;
  SS << In.rdbuf();
  try {
    return ProblemFile{Path, parseProblem(SS.str())};
  } catch (const ParseError &E) {
    throw ParseError(E.Line, E.Column,
                     Path.string() + ": " +
                         std::string(E.what()).substr(
                             std::string(E.what()).find(": ") + 2));
  }
}

std::vector<ProblemFile> loadProblemDir(const std::filesystem::path &Dir) {
  std::vector<std::filesystem::path> Paths;
  for (const auto &Entry : std::filesystem::directory_iterator(Dir))
    if (Entry.is_regular_file() && Entry.path().extension() == ".sl")
      Paths.push_back(Entry.path());
  std::sort(Paths.begin(), Paths.end());
  std::vector<ProblemFile> Out;
  for (const auto &P : Paths)
    Out.push_back(loadProblemFile(P));
  return Out;
}

std::string printTerm(const ProgramAst &P, const std::vector<InputVar> &Vars) {
  std::string Out;
  printTermTo(P, Vars, Out);
  return Out;
}

std::string printSolution(const ProgramAst &P, std::string_view FnName,
                          const std::vector<InputVar> &Vars) {
  return "(define-fun " + std::string(FnName) + " " + printParams(Vars) + " " +
         std::string(sortName(P.sort())) + " " + printTerm(P, Vars) + ")";
}

std::string printSolution(const ProgramAst &P, std::string_view FnName) {
  std::vector<InputVar> Vars;
  for (std::size_t I = 0, E = maxVarIndex(P); I < E; ++I)
    Vars.push_back({"x" + std::to_string(I), Sort::String});
  return printSolution(P, FnName, Vars);
}

ProgramAst parseTerm(const SExpr &E, const std::vector<InputVar> &Vars) {
  switch (E.K) {
  case SExpr::Kind::String:
    return ProgramAst::str(E.Text);
  case SExpr::Kind::Numeral:
    return ProgramAst::integer(parseNumeral(E));
  case SExpr::Kind::Symbol: {
    if (E.Text == "true" || E.Text == "false")
      return ProgramAst::boolean(E.Text == "true");
    for (std::size_t I = 0; I < Vars.size(); ++I)
      if (Vars[I].Name == E.Text)
        return ProgramAst::var(Vars[I].Name, I, Vars[I].VarSort);
    fail(E, "unknown symbol '" + E.Text + "'");
  }
  case SExpr::Kind::List:
    break;
  }
  if (isNegativeLiteral(E))
    return ProgramAst::integer(-parseNumeral(E.Items[1]));
  if (E.Items.empty())
    fail(E, "empty term");
  const std::string &Name = expectSymbol(E.Items[0], "operator");
  std::vector<ProgramAst> Children;
  for (std::size_t I = 1; I < E.Items.size(); ++I)
    Children.push_back(parseTerm(E.Items[I], Vars));
  try {
    return ProgramAst::apply(Name, std::move(Children));
  } catch (const TypeError &Err) {
    fail(E, Err.what());
  }
}

ProgramAst parseTerm(std::string_view Text, const std::vector<InputVar> &Vars) {
  std::vector<SExpr> Es = readSExprs(Text);
  if (Es.size() != 1)
    throw ParseError(1, 1, "expected exactly one term");
  return parseTerm(Es[0], Vars);
}

ProgramAst parseSolution(std::string_view Text,
                         const std::vector<InputVar> &Vars) {
  std::size_t Start = Text.find("(define-fun");
  if (Start == std::string_view::npos)
    throw ParseError(1, 1, "no define-fun in solver output");
  // Find the balanced end of the definition, skipping string literals.
  int Depth = 0;
  bool InString = false;
  std::size_t End = Start;
  for (; End < Text.size(); ++End) {
    char C = Text[End];
    if (InString) {
      if (C == '"')
        InString = false;
      continue;
    }
    if (C == '"')
      InString = true;
    else if (C == '(')
      ++Depth;
    else if (C == ')' && --Depth == 0)
      break;
  }
  if (End == Text.size())
    throw ParseError(1, Start + 1, "unterminated define-fun");
  std::vector<SExpr> Es = readSExprs(Text.substr(Start, End - Start + 1));
  const SExpr &Def = Es.at(0);
  if (Def.Items.size() != 5)
    fail(Def, "define-fun must be (define-fun <name> (<params>) <sort> <body>)");
  std::vector<InputVar> Params = parseParams(Def.Items[2]);
  if (Params.size() != Vars.size())
    fail(Def.Items[2], "define-fun has " + std::to_string(Params.size()) +
                           " parameters, expected " +
                           std::to_string(Vars.size()));
  ProgramAst Body = parseTerm(Def.Items[4], Params);
  if (Body.sort() != expectSort(Def.Items[3]))
    fail(Def.Items[4], "body sort does not match declared sort");
  return Body;
}

} // namespace grt
