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

#include "grt/enumerator.hpp"
#include "grt/string_theory.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <string_view>
#include <utility>

#if defined(__GLIBC__)
#include <malloc.h>
#endif

namespace grt {

SynthesisResult SynthesisResult::solvedWith(ProgramAst P, double Elapsed,
                                            std::uint64_t Explored) {
  SynthesisResult R;
  R.Status = Outcome::Solved;
  R.Program = std::move(P);
  R.ElapsedSeconds = Elapsed;
  R.ProgramsExplored = Explored;
  return R;
}

SynthesisResult SynthesisResult::timeout(double Budget,
                                         std::uint64_t Explored) {
  SynthesisResult R;
  R.Status = Outcome::Timeout;
  R.ElapsedSeconds = Budget;
  R.ProgramsExplored = Explored;
  return R;
}

const std::vector<std::string> &streamProbeInputs() {
  static const std::vector<std::string> Probes = {
      "", "a", "7", " ", "Ab c", "x-12.Y", "hello world", "2024-06-01"};
  return Probes;
}

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t mix(std::uint64_t H, std::uint64_t V) {
  H ^= V + 0x9e3779b97f4a7c15ULL + (H << 6) + (H >> 2);
  H ^= H >> 31;
  H *= 0xbf58476d1ce4e5b9ULL;
  return H ^ (H >> 29);
}

enum class NodeTag : std::uint8_t { Var, StrLit, IntLit, BoolLit, Apply };

struct Node {
  NodeTag Tag;
  std::uint8_t Payload; // Op for Apply nodes
  std::uint16_t Size;
  std::array<std::uint32_t, 3> Kids;
  std::uint32_t LitIndex; // variable or literal index for leaves
};

// One bank per sort. Values are stored flat: node I's value on example J is
// at I * NumExamples + J.
struct Bank {
  std::vector<Node> Nodes;
  std::vector<std::uint64_t> Hashes;
  std::vector<std::string> Strs;
  std::vector<std::int64_t> Ints;
  std::vector<std::uint8_t> Bools;
  // LevelStart[s] is the index of the first node of size s; LevelStart has
  // one trailing entry past the last completed level.
  std::vector<std::uint32_t> LevelStart{0, 0};
  std::vector<std::uint32_t> Table; // open addressing, node index + 1
};

struct Stop {};

class Engine {
public:
  Engine(const Grammar &G, std::vector<std::vector<std::string>> ExampleInputs,
         const std::vector<std::string> *Targets, const EnumeratorConfig &Cfg,
         Clock::time_point Deadline, bool HasDeadline)
      : G(G), Inputs(std::move(ExampleInputs)), Targets(Targets), Cfg(Cfg),
        Deadline(Deadline), HasDeadline(HasDeadline),
        M(Inputs.size()) {
    for (Bank &B : Banks)
      B.Table.assign(1024, 0);
    ScratchStr.resize(M);
    ScratchInt.resize(M);
    ScratchBool.resize(M);
    for (const TerminalSymbol &T : G.terminals()) {
      MaxArity = std::max(MaxArity, T.arity());
      OpTerm[static_cast<std::size_t>(T.Opcode)] = &T;
    }
  }

  /// Called for every new String-valued program; returning true stops.
  std::function<bool(std::uint32_t)> OnString;

  std::optional<std::uint32_t> Found;
  std::uint64_t Explored = 0;
  bool TimedOut = false;
  bool Exhausted = false;
  bool OutOfMemory = false;

  void run() {
    try {
      std::size_t MaxNonEmpty = 0;
      for (std::size_t S = 1; S <= Cfg.MaxProgramSize; ++S) {
        if (S > MaxArity * MaxNonEmpty + 1) {
          Exhausted = true;
          return;
        }
        std::size_t Before = totalNodes();
        if (S == 1)
          addLeaves();
        else
          addLevel(S);
        for (Bank &B : Banks)
          B.LevelStart.push_back(static_cast<std::uint32_t>(B.Nodes.size()));
        if (totalNodes() > Before)
          MaxNonEmpty = S;
        checkDeadline();
      }
      Exhausted = true;
    } catch (const Stop &) {
    }
  }

  ProgramAst build(Sort S, std::uint32_t Index) const {
    const Node &N = Banks[static_cast<int>(S)].Nodes[Index];
    switch (N.Tag) {
    case NodeTag::Var:
      return ProgramAst::var(G.inputVars()[N.LitIndex].Name, N.LitIndex);
    case NodeTag::StrLit:
      return ProgramAst::str(G.stringLiterals()[N.LitIndex]);
    case NodeTag::IntLit:
      return ProgramAst::integer(G.intLiterals()[N.LitIndex]);
    case NodeTag::BoolLit:
      return ProgramAst::boolean(G.boolLiterals()[N.LitIndex]);
    case NodeTag::Apply:
      break;
    }
    const TerminalSymbol &T = *OpTerm[N.Payload];
    std::vector<ProgramAst> Kids;
    for (std::size_t I = 0; I < T.arity(); ++I)
      Kids.push_back(build(T.ArgSorts[I], N.Kids[I]));
    return ProgramAst::apply(T, std::move(Kids));
  }

  const Bank &bank(Sort S) const { return Banks[static_cast<int>(S)]; }

private:
  const Grammar &G;
  std::vector<std::vector<std::string>> Inputs; // [example][var]
  const std::vector<std::string> *Targets;
  const EnumeratorConfig &Cfg;
  Clock::time_point Deadline;
  bool HasDeadline;
  std::size_t M;
  std::size_t MaxArity = 0;
  std::array<Bank, 3> Banks;
  std::array<const TerminalSymbol *, 32> OpTerm{};

  std::vector<std::string> ScratchStr;
  std::vector<std::int64_t> ScratchInt;
  std::vector<std::uint8_t> ScratchBool;

  std::size_t totalNodes() const {
    return Banks[0].Nodes.size() + Banks[1].Nodes.size() +
           Banks[2].Nodes.size();
  }

  void checkDeadline() {
    if (HasDeadline && Clock::now() >= Deadline) {
      TimedOut = true;
      throw Stop{};
    }
  }

  std::uint64_t hashScratch(Sort S) const {
    std::uint64_t H = static_cast<std::uint64_t>(S) + 1;
    for (std::size_t J = 0; J < M; ++J) {
      switch (S) {
      case Sort::String:
        H = mix(H, std::hash<std::string_view>{}(ScratchStr[J]));
        break;
      case Sort::Int:
        H = mix(H, static_cast<std::uint64_t>(ScratchInt[J]));
        break;
      case Sort::Bool:
        H = mix(H, ScratchBool[J]);
        break;
      }
    }
    return H;
  }

  bool equalsScratch(Sort S, std::uint32_t Index) const {
    const Bank &B = bank(S);
    std::size_t Base = static_cast<std::size_t>(Index) * M;
    for (std::size_t J = 0; J < M; ++J) {
      switch (S) {
      case Sort::String:
        if (B.Strs[Base + J] != ScratchStr[J])
          return false;
        break;
      case Sort::Int:
        if (B.Ints[Base + J] != ScratchInt[J])
          return false;
        break;
      case Sort::Bool:
        if (B.Bools[Base + J] != ScratchBool[J])
          return false;
        break;
      }
    }
    return true;
  }

  void grow(Bank &B) {
    std::vector<std::uint32_t> Table(B.Table.size() * 2, 0);
    std::size_t Mask = Table.size() - 1;
    for (std::uint32_t I = 0; I < B.Nodes.size(); ++I) {
      std::size_t Slot = B.Hashes[I] & Mask;
      while (Table[Slot])
        Slot = (Slot + 1) & Mask;
      Table[Slot] = I + 1;
    }
    B.Table = std::move(Table);
  }

  // Inserts the scratch values as a new node unless an observationally
  // equivalent node already exists.
  void offer(Sort S, const Node &N) {
    ++Explored;
    if ((Explored & 0xfff) == 0)
      checkDeadline();
    Bank &B = Banks[static_cast<int>(S)];
    std::uint64_t H = hashScratch(S);
    std::size_t Mask = B.Table.size() - 1;
    std::size_t Slot = H & Mask;
    while (std::uint32_t E = B.Table[Slot]) {
      if (B.Hashes[E - 1] == H && equalsScratch(S, E - 1))
        return;
      Slot = (Slot + 1) & Mask;
    }
    if (totalNodes() >= Cfg.MaxBankEntries) {
      OutOfMemory = true;
      throw Stop{};
    }
    auto Index = static_cast<std::uint32_t>(B.Nodes.size());
    B.Table[Slot] = Index + 1;
    B.Nodes.push_back(N);
    B.Hashes.push_back(H);
    switch (S) {
    case Sort::String:
      for (std::size_t J = 0; J < M; ++J)
        B.Strs.push_back(ScratchStr[J]);
      break;
    case Sort::Int:
      B.Ints.insert(B.Ints.end(), ScratchInt.begin(), ScratchInt.end());
      break;
    case Sort::Bool:
      B.Bools.insert(B.Bools.end(), ScratchBool.begin(), ScratchBool.end());
      break;
    }
    if (B.Nodes.size() * 2 > B.Table.size())
      grow(B);

    if (S == G.startSort()) {
      if (Targets && S == Sort::String &&
          std::equal(ScratchStr.begin(), ScratchStr.end(), Targets->begin())) {
        Found = Index;
        throw Stop{};
      }
      if (OnString && S == Sort::String && OnString(Index))
        throw Stop{};
    }
  }

  void addLeaves() {
    Node N{};
    N.Size = 1;
    for (std::uint32_t V = 0; V < G.inputVars().size(); ++V) {
      for (std::size_t J = 0; J < M; ++J)
        ScratchStr[J] = Inputs[J][V];
      N.Tag = NodeTag::Var;
      N.LitIndex = V;
      offer(Sort::String, N);
    }
    for (std::uint32_t L = 0; L < G.stringLiterals().size(); ++L) {
      std::fill(ScratchStr.begin(), ScratchStr.end(), G.stringLiterals()[L]);
      N.Tag = NodeTag::StrLit;
      N.LitIndex = L;
      offer(Sort::String, N);
    }
    for (std::uint32_t L = 0; L < G.intLiterals().size(); ++L) {
      std::fill(ScratchInt.begin(), ScratchInt.end(), G.intLiterals()[L]);
      N.Tag = NodeTag::IntLit;
      N.LitIndex = L;
      offer(Sort::Int, N);
    }
    for (std::uint32_t L = 0; L < G.boolLiterals().size(); ++L) {
      std::fill(ScratchBool.begin(), ScratchBool.end(),
                G.boolLiterals()[L] ? 1 : 0);
      N.Tag = NodeTag::BoolLit;
      N.LitIndex = L;
      offer(Sort::Bool, N);
    }
  }

  std::pair<std::uint32_t, std::uint32_t> range(Sort S,
                                                std::size_t Size) const {
    const Bank &B = bank(S);
    return {B.LevelStart[Size], B.LevelStart[Size + 1]};
  }

  // Computes op(args) for every example into the scratch buffer of the
  // terminal's return sort.
  void apply(const TerminalSymbol &T, const std::uint32_t *Kids) {
    const std::size_t K0 = static_cast<std::size_t>(Kids[0]) * M;
    const std::size_t K1 = T.arity() > 1 ? static_cast<std::size_t>(Kids[1]) * M : 0;
    const std::size_t K2 = T.arity() > 2 ? static_cast<std::size_t>(Kids[2]) * M : 0;
    const auto &S = Banks[0].Strs;
    const auto &I = Banks[1].Ints;
    const auto &B = Banks[2].Bools;
    for (std::size_t J = 0; J < M; ++J) {
      switch (T.Opcode) {
      case Op::Concat:
        strings::concat(S[K0 + J], S[K1 + J], ScratchStr[J]);
        break;
      case Op::Replace:
        strings::replace(S[K0 + J], S[K1 + J], S[K2 + J], ScratchStr[J]);
        break;
      case Op::At:
        strings::at(S[K0 + J], I[K1 + J], ScratchStr[J]);
        break;
      case Op::Substr:
        strings::substr(S[K0 + J], I[K1 + J], I[K2 + J], ScratchStr[J]);
        break;
      case Op::Len:
        ScratchInt[J] = strings::length(S[K0 + J]);
        break;
      case Op::IndexOf:
        ScratchInt[J] = strings::indexof(S[K0 + J], S[K1 + J], I[K2 + J]);
        break;
      case Op::ToInt:
        ScratchInt[J] = strings::toInt(S[K0 + J]);
        break;
      case Op::FromInt:
        strings::fromInt(I[K0 + J], ScratchStr[J]);
        break;
      case Op::PrefixOf:
        ScratchBool[J] = strings::prefixof(S[K0 + J], S[K1 + J]);
        break;
      case Op::SuffixOf:
        ScratchBool[J] = strings::suffixof(S[K0 + J], S[K1 + J]);
        break;
      case Op::Contains:
        ScratchBool[J] = strings::contains(S[K0 + J], S[K1 + J]);
        break;
      case Op::Ite:
        ScratchStr[J] = B[K0 + J] ? S[K1 + J] : S[K2 + J];
        break;
      case Op::Add:
        ScratchInt[J] = strings::add(I[K0 + J], I[K1 + J]);
        break;
      case Op::Sub:
        ScratchInt[J] = strings::sub(I[K0 + J], I[K1 + J]);
        break;
      case Op::IntEq:
        ScratchBool[J] = I[K0 + J] == I[K1 + J];
        break;
      }
    }
  }

  void addLevel(std::size_t Size) {
    for (const TerminalSymbol &T : G.terminals()) {
      std::size_t K = T.arity();
      if (K == 0 || K > Size - 1)
        continue;
      Node N{};
      N.Tag = NodeTag::Apply;
      N.Payload = static_cast<std::uint8_t>(T.Opcode);
      N.Size = static_cast<std::uint16_t>(Size);
      // Compositions of Size - 1 into K positive parts, lexicographic.
      std::array<std::size_t, 3> Parts{};
      forEachComposition(Size - 1, K, Parts, 0, [&] {
        std::array<std::pair<std::uint32_t, std::uint32_t>, 3> R{};
        for (std::size_t A = 0; A < K; ++A) {
          R[A] = range(T.ArgSorts[A], Parts[A]);
          if (R[A].first == R[A].second)
            return;
        }
        if (K == 1) {
          for (N.Kids[0] = R[0].first; N.Kids[0] < R[0].second; ++N.Kids[0]) {
            apply(T, N.Kids.data());
            offer(T.RetSort, N);
          }
        } else if (K == 2) {
          for (std::uint32_t A = R[0].first; A < R[0].second; ++A)
            for (std::uint32_t B = R[1].first; B < R[1].second; ++B) {
              N.Kids = {A, B, 0};
              apply(T, N.Kids.data());
              offer(T.RetSort, N);
            }
        } else {
          for (std::uint32_t A = R[0].first; A < R[0].second; ++A)
            for (std::uint32_t B = R[1].first; B < R[1].second; ++B)
              for (std::uint32_t C = R[2].first; C < R[2].second; ++C) {
                N.Kids = {A, B, C};
                apply(T, N.Kids.data());
                offer(T.RetSort, N);
              }
        }
      });
    }
  }

  template <typename F>
  static void forEachComposition(std::size_t Total, std::size_t K,
                                 std::array<std::size_t, 3> &Parts,
                                 std::size_t At, const F &Fn) {
    if (At + 1 == K) {
      Parts[At] = Total;
      Fn();
      return;
    }
    for (std::size_t P = 1; P + (K - At - 1) <= Total; ++P) {
      Parts[At] = P;
      forEachComposition(Total - P, K, Parts, At + 1, Fn);
    }
  }
};

// A large search frees millions of small blocks. Left alone, glibc sorts
// them out during the next solve and bills it for this one.
void releaseFreedMemory() {
#if defined(__GLIBC__)
  malloc_trim(0);
#endif
}

double secondsSince(Clock::time_point Start) {
  return std::chrono::duration<double>(Clock::now() - Start).count();
}

} // namespace

SynthesisResult solve(const SygusProblem &P, double Budget,
                      const EnumeratorConfig &Cfg) {
  auto Start = Clock::now();
  const Grammar &G = P.TheGrammar;
  if (P.Constraints.empty())
    throw Error("solve requires at least one constraint");
  std::vector<std::vector<std::string>> Inputs;
  std::vector<std::string> Targets;
  for (const IoConstraint &C : P.Constraints) {
    if (C.Inputs.size() != G.inputVars().size())
      throw TypeError("constraint has " + std::to_string(C.Inputs.size()) +
                      " inputs, grammar declares " +
                      std::to_string(G.inputVars().size()));
    Inputs.push_back(C.Inputs);
    Targets.push_back(C.Output);
  }
  auto Deadline =
      Start + std::chrono::duration_cast<Clock::duration>(
                  std::chrono::duration<double>(std::max(0.0, Budget)));
  SynthesisResult R = [&] {
    Engine E(G, std::move(Inputs), &Targets, Cfg, Deadline, true);
    E.run();
    if (E.Found) {
      ProgramAst Prog = E.build(G.startSort(), *E.Found);
      // The interpreter has the final word on every answer.
      if (!satisfiesAll(Prog, P.Constraints))
        throw Error("internal error: enumerator produced a wrong program");
      return SynthesisResult::solvedWith(std::move(Prog),
                                         std::min(secondsSince(Start), Budget),
                                         E.Explored);
    }
    SynthesisResult T = SynthesisResult::timeout(Budget, E.Explored);
    T.StoppedEarly = !E.TimedOut;
    if (T.StoppedEarly)
      T.ElapsedSeconds = std::min(secondsSince(Start), Budget);
    return T;
  }();
  releaseFreedMemory();
  return R;
}

SynthesisResult solve(const SygusProblem &P, const EnumeratorConfig &Cfg) {
  return solve(P, P.TimeoutSeconds, Cfg);
}

SolveFn enumerativeSolver(EnumeratorConfig Cfg) {
  return [Cfg](const SygusProblem &P, double Budget) {
    return solve(P, Budget, Cfg);
  };
}

std::vector<ProgramAst> stream(const Grammar &G, std::size_t N,
                               const EnumeratorConfig &Cfg) {
  if (N == 0)
    throw Error("stream requires n >= 1");
  const auto &Probes = streamProbeInputs();
  std::vector<std::vector<std::string>> Inputs(Probes.size());
  for (std::size_t I = 0; I < Probes.size(); ++I)
    for (std::size_t V = 0; V < G.inputVars().size(); ++V)
      Inputs[I].push_back(Probes[(I + 3 * V) % Probes.size()]);
  if (G.inputVars().empty() && G.startSort() != Sort::String)
    throw GrammarExhausted("grammar has no String programs");

  Engine E(G, std::move(Inputs), nullptr, Cfg, {}, false);
  std::vector<std::uint32_t> Indices;
  E.OnString = [&](std::uint32_t Index) {
    Indices.push_back(Index);
    return Indices.size() >= N;
  };
  E.run();
  if (Indices.size() < N) {
    if (E.OutOfMemory)
      throw GrammarExhausted("bank limit reached after " +
                             std::to_string(Indices.size()) + " programs");
    throw GrammarExhausted("grammar has only " +
                           std::to_string(Indices.size()) +
                           " observationally distinct programs");
  }
  std::vector<ProgramAst> Out;
  Out.reserve(N);
  for (std::uint32_t I : Indices)
    Out.push_back(E.build(Sort::String, I));
  return Out;
}

} // namespace grt
