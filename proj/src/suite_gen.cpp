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

#include "grt/suite_gen.hpp"
#include "grt/sygus_format.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <utility>

namespace grt {

namespace {

const std::array<const char *, 12> FirstNames = {
    "Ann", "Bob", "Carla", "Dmitri", "Eve", "Farid",
    "Grace", "Hiro", "Ines", "Jon", "Kemal", "Lena"};
const std::array<const char *, 12> LastNames = {
    "Smith", "Ito", "Novak", "Garcia", "Okafor", "Lee",
    "Berg", "Rossi", "Khan", "Moreau", "Silva", "Ward"};

std::string digits(Rng &R, std::size_t N) {
  std::string S;
  for (std::size_t I = 0; I < N; ++I)
    S += static_cast<char>('0' + R.below(10));
  return S;
}

std::string letters(Rng &R, std::size_t N) {
  std::string S;
  for (std::size_t I = 0; I < N; ++I)
    S += static_cast<char>('A' + R.below(26));
  return S;
}

std::string record(Rng &R, RecordKind K, const std::string &Sep) {
  switch (K) {
  case RecordKind::Phone:
    return digits(R, 3) + Sep + digits(R, 3) + Sep + digits(R, 4);
  case RecordKind::Name:
    return std::string(FirstNames[R.below(FirstNames.size())]) + Sep +
           LastNames[R.below(LastNames.size())];
  case RecordKind::Date:
    return std::to_string(1990 + R.below(40)) + Sep + digits(R, 1) +
           digits(R, 1) + Sep + digits(R, 2);
  case RecordKind::Code:
    return letters(R, 2 + R.below(2)) + Sep + digits(R, 2 + R.below(3));
  }
  return "";
}

const char *kindName(RecordKind K) {
  switch (K) {
  case RecordKind::Phone:
    return "phone";
  case RecordKind::Name:
    return "name";
  case RecordKind::Date:
    return "date";
  case RecordKind::Code:
    return "code";
  }
  return "record";
}

std::string substituteSep(const std::string &Template, const std::string &Sep) {
  std::string Out;
  for (std::size_t I = 0; I < Template.size(); ++I) {
    if (Template.compare(I, 3, "SEP") == 0) {
      Out += quoteString(Sep);
      I += 2;
    } else {
      Out += Template[I];
    }
  }
  return Out;
}

// True when a bare variable or literal already meets every example.
bool trivial(const Grammar &G, const std::vector<IoConstraint> &Cs) {
  auto AllEqual = [&](auto Pick) {
    return std::all_of(Cs.begin(), Cs.end(),
                       [&](const IoConstraint &C) { return Pick(C) == C.Output; });
  };
  for (std::size_t V = 0; V < G.inputVars().size(); ++V)
    if (AllEqual([&](const IoConstraint &C) { return C.Inputs[V]; }))
      return true;
  for (const std::string &L : G.stringLiterals())
    if (AllEqual([&](const IoConstraint &) { return L; }))
      return true;
  return false;
}

} // namespace

std::string randomRecord(Rng &R, RecordKind K) {
  static const std::array<const char *, 3> Seps = {"-", ".", " "};
  return record(R, K, K == RecordKind::Name ? " " : Seps[R.below(2)]);
}

const std::vector<std::string> &suiteTemplates() {
  static const std::vector<std::string> Templates = {
      "(str.substr x0 0 (str.indexof x0 SEP 0))",
      "(str.replace x0 SEP \"\")",
      "(str.replace (str.replace x0 SEP \"\") SEP \"\")",
      "(str.++ (str.at x0 0) SEP)",
      "(str.++ (str.at x0 0) (str.at x0 1))",
      "(int.to.str (str.len x0))",
      "(int.to.str (str.indexof x0 SEP 0))",
      "(str.substr x0 1 (str.len x0))",
      "(str.at x0 (- (str.len x0) 1))",
      "(str.++ (str.at x0 0) (str.++ SEP x0))",
      "(str.++ x0 (str.++ SEP (str.at x0 0)))",
      "(str.substr x0 (str.indexof x0 SEP 0) (str.len x0))",
      "(str.replace x0 (str.at x0 0) SEP)",
      "(str.++ (str.substr x0 0 (str.indexof x0 SEP 0)) SEP)",
      "(str.at x0 (+ (str.indexof x0 SEP 0) 1))",
      "(ite (str.prefixof SEP x0) x0 (str.++ SEP x0))",
      "(str.++ SEP (str.replace x0 SEP \"\"))",
      "(str.substr x0 (+ (str.indexof x0 SEP 0) 1) (str.len x0))",
      "(str.substr x0 0 (+ (str.indexof x0 SEP 0) 1))",
      "(str.at x0 (- (str.indexof x0 SEP 0) 1))",
      "(int.to.str (+ (str.indexof x0 SEP 0) 1))",
      "(str.++ (str.replace x0 SEP \"\") (str.at x0 0))",
      "(str.replace (str.substr x0 1 (str.len x0)) SEP \"\")",
      "(str.substr x0 (+ (str.indexof x0 SEP 0) 1) (str.indexof x0 SEP 0))",
      "(str.++ (str.substr x0 0 (str.indexof x0 SEP 0)) (str.at x0 (- (str.len x0) 1)))",
      "(str.++ (str.at x0 0) (str.++ SEP (str.at x0 (+ (str.indexof x0 SEP 0) 1))))",
      "(str.++ (str.substr x0 (+ (str.indexof x0 SEP 0) 1) (str.len x0)) SEP)",
      "(str.++ (str.at x0 0) (str.at x0 (- (str.len x0) 1)))",
      "(str.substr x0 (- (str.len x0) (+ 1 1)) (str.len x0))",
      "(str.++ (str.at x0 (+ (str.indexof x0 SEP 0) 1)) (str.at x0 0))",
      "(str.++ (str.at x0 (- (str.len x0) 1)) (str.++ SEP (str.at x0 0)))",
      "(str.++ (str.at x0 0) (str.++ SEP (str.substr x0 (+ (str.indexof x0 SEP 0) 1) (str.len x0))))",
      "(str.++ (str.substr x0 0 (str.indexof x0 SEP 0)) (str.++ SEP (str.at x0 (- (str.len x0) 1))))",
      "(str.++ (str.substr x0 0 (+ 1 1)) (str.++ SEP (str.substr x0 (- (str.len x0) (+ 1 1)) (str.len x0))))",
      "(str.++ (str.substr x0 (- (str.len x0) (+ 1 1)) (str.len x0)) (str.++ SEP (str.at x0 0)))",
      "(str.++ (int.to.str (str.len x0)) (str.++ SEP (str.at x0 0)))",
      "(str.replace (str.substr x0 (+ (str.indexof x0 SEP 0) 1) (str.len x0)) SEP \"\")",
  };
  return Templates;
}

std::vector<GeneratedProblem> generateSuite(const Grammar &G,
                                            const SuiteConfig &Cfg) {
  static const std::array<RecordKind, 4> Kinds = {
      RecordKind::Phone, RecordKind::Name, RecordKind::Date, RecordKind::Code};
  if (G.inputVars().size() != 1)
    throw Error("generateSuite: grammar must have exactly one input");
  std::vector<std::string> Seps;
  for (const std::string &L : G.stringLiterals())
    if (L.size() == 1)
      Seps.push_back(L);
  if (Seps.empty())
    throw Error("generateSuite: grammar has no one-character literal");

  Rng R(Cfg.Seed);
  const auto &Templates = suiteTemplates();
  std::vector<GeneratedProblem> Out;
  std::set<std::vector<std::pair<std::string, std::string>>> Seen;
  std::size_t Attempts = 0;
  while (Out.size() < Cfg.Count) {
    if (++Attempts > 1000 * (Cfg.Count + 1))
      throw Error("generateSuite: cannot find enough distinct problems");
    RecordKind K = Kinds[R.below(Kinds.size())];
    std::string Sep = Seps[R.below(Seps.size())];
    std::string Body = substituteSep(Templates[R.below(Templates.size())],
                                     Seps[R.below(Seps.size())]);
    ProgramAst Sol = parseTerm(Body, G.inputVars());
    if (!programInGrammar(Sol, G))
      continue;

    std::vector<IoConstraint> Cs;
    std::set<std::string> Inputs;
    while (Cs.size() < Cfg.ExamplesPerProblem) {
      std::string In = record(R, K, Sep);
      if (!Inputs.insert(In).second)
        continue;
      IoConstraint C{{In}, ""};
      C.Output = std::get<std::string>(evaluate(Sol, C.Inputs));
      Cs.push_back(std::move(C));
    }
    std::vector<std::pair<std::string, std::string>> Key;
    for (const IoConstraint &C : Cs)
      Key.emplace_back(C.Inputs[0], C.Output);
    std::sort(Key.begin(), Key.end());
    if (trivial(G, Cs) || !Seen.insert(Key).second)
      continue;

    std::string Family = kindName(K);
    SygusProblem P;
    P.TheGrammar = G;
    P.Constraints = std::move(Cs);
    Out.push_back(GeneratedProblem{
        {Cfg.IdPrefix + "-" + std::to_string(Out.size()) + "-" + Family,
         std::move(P)},
        std::move(Sol),
        Family});
  }
  return Out;
}

std::string printGeneratedProblem(const GeneratedProblem &P) {
  return "; " + P.Named.Id + " (" + P.Family + ")\n; known solution: " +
         printTerm(P.Solution, P.Named.Problem.TheGrammar.inputVars()) +
         "\n" + printProblem(P.Named.Problem);
}

} // namespace grt
