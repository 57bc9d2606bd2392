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

#include "grt/errors.hpp"
#include "grt/sygus_format.hpp"
#include "oracle/reference.hpp"

#include "gtest/gtest.h"

#include <filesystem>

using namespace grt;

namespace {

const char *Minimal = R"(
(set-logic SLIA)
(synth-fun f ((x0 String)) String
  ((Start String (x0 "" (str.++ Start Start)))))
(declare-var x0 String)
(constraint (= (f "a") "aa"))
(check-synth)
)";

std::vector<std::filesystem::path> shippedFiles() {
  std::vector<std::filesystem::path> Out;
  for (const char *Dir : {"human", "suite"}) {
    std::filesystem::path D = std::filesystem::path(GRT_SOURCE_DIR) /
                              "benchmarks" / Dir;
    if (!std::filesystem::exists(D))
      continue;
    for (const auto &E : std::filesystem::directory_iterator(D))
      if (E.path().extension() == ".sl")
        Out.push_back(E.path());
  }
  return Out;
}

} // namespace

TEST(ParseProblemTest, Minimal) {
  SygusProblem P = parseProblem(Minimal);
  ASSERT_EQ(P.Constraints.size(), 1u);
  EXPECT_EQ(P.Constraints[0], (IoConstraint{{"a"}, "aa"}));
  EXPECT_EQ(P.TheGrammar.terminalNames(), std::vector<std::string>{"str.++"});
  EXPECT_EQ(P.TheGrammar.stringLiterals(), std::vector<std::string>{""});
  EXPECT_EQ(P.FunctionName, "f");
}

TEST(ParseProblemTest, NoConstraintsIsValid) {
  std::string Text = Minimal;
  Text.erase(Text.find("(constraint"), Text.find("(check-synth") -
                                           Text.find("(constraint"));
  EXPECT_TRUE(parseProblem(Text).Constraints.empty());
}

TEST(ParseProblemTest, Errors) {
  EXPECT_THROW(parseProblem("(constraint (= (f"), ParseError);
  std::string Unknown = Minimal;
  Unknown.replace(Unknown.find("str.++"), 6, "str.rev");
  EXPECT_THROW(parseProblem(Unknown), UnknownTerminal);
  EXPECT_THROW(parseProblem("(set-logic SLIA)\n(define-sort S String)"),
               ParseError);
}

TEST(ParseProblemTest, ErrorPosition) {
  try {
    parseProblem("(set-logic SLIA)\n  (constraint (= (f");
    FAIL() << "expected ParseError";
  } catch (const ParseError &E) {
    EXPECT_EQ(E.Line, 2u);
  }
}

TEST(ParseProblemTest, QuoteEscaping) {
  std::string Text = Minimal;
  Text.replace(Text.find("\"aa\""), 4, "\"a\"\"b\"");
  SygusProblem P = parseProblem(Text);
  EXPECT_EQ(P.Constraints[0].Output, "a\"b");
  EXPECT_EQ(parseProblem(printProblem(P)), P);
}

TEST(PrintSolutionTest, WorkedExamples) {
  ProgramAst X = ProgramAst::var("x0", 0);
  EXPECT_EQ(printSolution(X, "f"), "(define-fun f ((x0 String)) String x0)");
  std::string Twice = printSolution(ProgramAst::apply("str.++", {X, X}), "f");
  EXPECT_NE(Twice.find("(str.++ x0 x0)"), std::string::npos);
}

TEST(PrintSolutionTest, RoundTripEvaluatesEqual) {
  Rng R(5);
  Grammar G = defaultGrammar();
  std::vector<InputVar> Vars = G.inputVars();
  for (int I = 0; I < 100; ++I) {
    ProgramAst P = oracle::randomTerm(R, G, Sort::String, 4);
    ProgramAst Back = parseSolution(printSolution(P, "f", Vars), Vars);
    for (int K = 0; K < 5; ++K) {
      std::vector<std::string> In{oracle::randomString(R, 8)};
      EXPECT_EQ(evaluate(Back, In), evaluate(P, In));
    }
  }
}

TEST(ParseSolutionTest, SkipsLeadingText) {
  ProgramAst P = parseSolution("unsat\n(define-fun f ((y String)) String "
                               "(str.++ y \"!\"))",
                               {{"x0", Sort::String}});
  EXPECT_EQ(evaluate(P, std::vector<std::string>{"hi"}), Value(std::string("hi!")));
  EXPECT_THROW(parseSolution("garbage", {{"x0", Sort::String}}), ParseError);
}

TEST(FixpointTest, ShippedBenchmarks) {
  auto Files = shippedFiles();
  ASSERT_GE(Files.size(), 10u);
  for (const auto &Path : Files) {
    SCOPED_TRACE(Path.string());
    SygusProblem P = loadProblemFile(Path).Parsed;
    std::string Once = printProblem(P);
    EXPECT_EQ(parseProblem(Once), P);
    EXPECT_EQ(printProblem(parseProblem(Once)), Once);
  }
}
