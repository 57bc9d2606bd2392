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
#include "grt/errors.hpp"
#include "grt/string_theory.hpp"
#include "grt/sygus_format.hpp"
#include "oracle/reference.hpp"

#include "gtest/gtest.h"

#include <limits>

using namespace grt;

namespace {

ProgramAst x0() { return ProgramAst::var("x0", 0); }

std::vector<TerminalSymbol> pick(std::initializer_list<const char *> Names) {
  std::vector<TerminalSymbol> Ts;
  for (const char *N : Names)
    Ts.push_back(lookupTerminal(N));
  return Ts;
}

Grammar grammarWith(std::initializer_list<const char *> Names) {
  return Grammar(pick(Names), Sort::String, {""}, {0, 1}, {},
                 {{"x0", Sort::String}});
}

} // namespace

TEST(EvaluateTest, WorkedExamples) {
  std::vector<std::string> In{"abc"};
  EXPECT_EQ(evaluate(x0(), In), Value(std::string("abc")));

  std::vector<std::string> Bc{"bc"};
  auto Cat = ProgramAst::apply("str.++", {ProgramAst::str("a"), x0()});
  EXPECT_EQ(evaluate(Cat, Bc), Value(std::string("abc")));

  auto Sub = ProgramAst::apply(
      "str.substr", {ProgramAst::str("hello"), ProgramAst::integer(1),
                     ProgramAst::integer(3)});
  EXPECT_EQ(evaluate(Sub, std::vector<std::string>{}), Value(std::string("ell")));
}

TEST(EvaluateTest, Totalization) {
  struct {
    const char *Term;
    Value Want;
  } Cases[] = {
      {"(str.substr \"abc\" 5 1)", Value(std::string(""))},
      {"(str.substr \"abc\" (- 0 1) 2)", Value(std::string(""))},
      {"(str.substr \"abc\" 1 0)", Value(std::string(""))},
      {"(str.substr \"abc\" 1 100)", Value(std::string("bc"))},
      {"(str.at \"abc\" 3)", Value(std::string(""))},
      {"(str.to.int \"12a\")", Value(std::int64_t{-1})},
      {"(str.to.int \"\")", Value(std::int64_t{-1})},
      {"(str.to.int \"007\")", Value(std::int64_t{7})},
      {"(str.indexof \"abc\" \"z\" 0)", Value(std::int64_t{-1})},
      {"(str.indexof \"abc\" \"\" 3)", Value(std::int64_t{3})},
      {"(str.indexof \"abc\" \"\" 4)", Value(std::int64_t{-1})},
      {"(str.replace \"abc\" \"\" \"-\")", Value(std::string("-abc"))},
      {"(str.replace \"abab\" \"b\" \"\")", Value(std::string("aab"))},
      {"(int.to.str (- 0 1))", Value(std::string(""))},
      {"(str.prefixof \"\" \"\")", Value(true)},
      {"(str.suffixof \"bc\" \"abc\")", Value(true)},
  };
  for (const auto &C : Cases) {
    SCOPED_TRACE(C.Term);
    ProgramAst P = parseTerm(C.Term, {});
    EXPECT_EQ(evaluate(P, std::vector<std::string>{}), C.Want);
    EXPECT_EQ(oracle::refEval(P, {}), C.Want);
  }
}

TEST(EvaluateTest, IntegersSaturate) {
  constexpr auto Max = std::numeric_limits<std::int64_t>::max();
  constexpr auto Min = std::numeric_limits<std::int64_t>::min();
  EXPECT_EQ(strings::add(Max, 1), Max);
  EXPECT_EQ(strings::sub(Min, 1), Min);
  EXPECT_EQ(strings::sub(0, Min), Max);
  EXPECT_EQ(strings::toInt("99999999999999999999999"), Max);
}

TEST(EvaluateTest, ArityMismatchIsTypeError) {
  std::vector<std::string> Two{"a", "b"};
  EXPECT_THROW(evaluate(x0(), Two, 1), TypeError);
  EXPECT_THROW(evaluate(ProgramAst::var("x1", 1), std::vector<std::string>{"a"}),
               TypeError);
}

TEST(EvaluateTest, ApplyChecksSorts) {
  EXPECT_THROW(ProgramAst::apply("str.len", {ProgramAst::integer(1)}),
               TypeError);
  EXPECT_THROW(ProgramAst::apply("str.++", {x0()}), TypeError);
}

TEST(EvaluateTest, TotalOnArbitraryBytes) {
  Rng R(7);
  Grammar G = defaultGrammar();
  for (int I = 0; I < 300; ++I) {
    ProgramAst P = oracle::randomTerm(R, G, Sort::String, 4);
    std::string In;
    for (int K = 0; K < 8; ++K)
      In.push_back(static_cast<char>(R.below(256)));
    Value V = evaluate(P, std::vector<std::string>{In});
    EXPECT_EQ(sortOf(V), Sort::String);
  }
}

TEST(SatisfiesTest, WorkedExamples) {
  EXPECT_TRUE(satisfies(x0(), {{"q"}, "q"}));
  EXPECT_FALSE(satisfies(ProgramAst::str("z"), {{"q"}, "q"}));
  auto Twice = ProgramAst::apply("str.++", {x0(), x0()});
  EXPECT_TRUE(satisfies(Twice, {{"ab"}, "abab"}));
}

TEST(SatisfiesTest, AgreesWithOracleEquality) {
  Rng R(11);
  Grammar G = defaultGrammar();
  for (int I = 0; I < 200; ++I) {
    ProgramAst P = oracle::randomTerm(R, G, Sort::String, 3);
    std::vector<std::string> In{oracle::randomString(R, 6)};
    std::string Want = std::get<std::string>(oracle::refEval(P, In));
    EXPECT_TRUE(satisfies(P, {In, Want}));
    EXPECT_FALSE(satisfies(P, {In, Want + "#"}));
  }
}

TEST(GrammarTest, DropTerminal) {
  Grammar G = grammarWith({"str.++", "str.replace", "str.at"});
  Grammar D = drop_terminal(G, "str.replace");
  EXPECT_EQ(D.terminalNames(),
            (std::vector<std::string>{"str.++", "str.at"}));
  EXPECT_EQ(G.terminals().size(), 3u);
  EXPECT_THROW(drop_terminal(D, "str.replace"), UnknownTerminal);
  EXPECT_THROW(drop_terminal(G, "no.such"), UnknownTerminal);

  Grammar Full = defaultGrammar();
  EXPECT_EQ(drop_terminal(Full, "str.replace").terminals().size(),
            Full.terminals().size() - 1);
}

TEST(GrammarTest, DropOrderIndependent) {
  Grammar G = defaultGrammar();
  auto Names = G.terminalNames();
  for (const std::string &A : Names)
    for (const std::string &B : Names) {
      if (A == B)
        continue;
      EXPECT_EQ(G.dropTerminal(A).dropTerminal(B),
                G.dropTerminal(B).dropTerminal(A));
    }
}

TEST(GrammarTest, DefaultHasFifteenCanonicalTerminals) {
  std::vector<std::string> Want = {
      "str.++",     "str.replace",  "str.at",       "str.substr",
      "str.len",    "str.indexof",  "str.to.int",   "int.to.str",
      "str.prefixof", "str.suffixof", "str.contains", "ite",
      "+",          "-",            "="};
  EXPECT_EQ(defaultGrammar().terminalNames(), Want);
}

TEST(ProgramSizeTest, WorkedExamples) {
  EXPECT_EQ(programSize(x0()), 1u);
  EXPECT_EQ(programSize(ProgramAst::apply("str.++", {x0(), ProgramAst::str("a")})),
            3u);
}

TEST(ProgramSizeTest, Additive) {
  Rng R(3);
  Grammar G = defaultGrammar();
  for (int I = 0; I < 200; ++I) {
    ProgramAst P = oracle::randomTerm(R, G, Sort::String, 4);
    std::size_t Sum = 1;
    for (const ProgramAst &C : P.children())
      Sum += programSize(C);
    if (P.kind() == ProgramAst::Kind::Apply)
      EXPECT_EQ(programSize(P), Sum);
    else
      EXPECT_EQ(programSize(P), 1u);
  }
}

TEST(ProgramTest, OccurrencesAndMembership) {
  auto P = ProgramAst::apply(
      "str.at", {x0(), ProgramAst::apply("str.len", {x0()})});
  EXPECT_EQ(terminalOccurrences(P), (std::set<std::string>{"str.at", "str.len"}));
  EXPECT_TRUE(programInGrammar(P, defaultGrammar()));
  EXPECT_FALSE(programInGrammar(P, defaultGrammar().dropTerminal("str.len")));
}
