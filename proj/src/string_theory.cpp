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

#include "grt/string_theory.hpp"

#include <limits>

namespace grt::strings {

namespace {
constexpr std::int64_t MaxInt = std::numeric_limits<std::int64_t>::max();
constexpr std::int64_t MinInt = std::numeric_limits<std::int64_t>::min();
} // namespace

void concat(std::string_view A, std::string_view B, std::string &Out) {
  Out.clear();
  Out.reserve(A.size() + B.size());
  Out.append(A);
  Out.append(B);
}

void replace(std::string_view S, std::string_view Pat, std::string_view With,
             std::string &Out) {
  std::size_t Pos = S.find(Pat);
  if (Pos == std::string_view::npos) {
    Out.assign(S);
    return;
  }
  Out.clear();
  Out.reserve(S.size() - Pat.size() + With.size());
  Out.append(S.substr(0, Pos));
  Out.append(With);
  Out.append(S.substr(Pos + Pat.size()));
}

void at(std::string_view S, std::int64_t I, std::string &Out) {
  if (I < 0 || I >= static_cast<std::int64_t>(S.size())) {
    Out.clear();
    return;
  }
  Out.assign(1, S[static_cast<std::size_t>(I)]);
}

void substr(std::string_view S, std::int64_t I, std::int64_t N,
            std::string &Out) {
  auto Len = static_cast<std::int64_t>(S.size());
  if (I < 0 || I >= Len || N <= 0) {
    Out.clear();
    return;
  }
  std::int64_t Count = N < Len - I ? N : Len - I;
  Out.assign(S.substr(static_cast<std::size_t>(I),
                      static_cast<std::size_t>(Count)));
}

std::int64_t length(std::string_view S) {
  return static_cast<std::int64_t>(S.size());
}

std::int64_t indexof(std::string_view S, std::string_view T, std::int64_t I) {
  if (I < 0 || I > static_cast<std::int64_t>(S.size()))
    return -1;
  std::size_t Pos = S.find(T, static_cast<std::size_t>(I));
  return Pos == std::string_view::npos ? -1 : static_cast<std::int64_t>(Pos);
}

std::int64_t toInt(std::string_view S) {
  if (S.empty())
    return -1;
  std::int64_t V = 0;
  for (char C : S) {
    if (C < '0' || C > '9')
      return -1;
    int D = C - '0';
    if (V > (MaxInt - D) / 10)
      V = MaxInt;
    else
      V = V * 10 + D;
  }
  return V;
}

void fromInt(std::int64_t N, std::string &Out) {
  if (N < 0) {
    Out.clear();
    return;
  }
  Out = std::to_string(N);
}

bool prefixof(std::string_view Pre, std::string_view S) {
  return S.substr(0, Pre.size()) == Pre && Pre.size() <= S.size();
}

bool suffixof(std::string_view Suf, std::string_view S) {
  return Suf.size() <= S.size() && S.substr(S.size() - Suf.size()) == Suf;
}

bool contains(std::string_view S, std::string_view T) {
  return S.find(T) != std::string_view::npos;
}

std::int64_t add(std::int64_t A, std::int64_t B) {
  std::int64_t R;
  if (__builtin_add_overflow(A, B, &R))
    return A > 0 ? MaxInt : MinInt;
  return R;
}

std::int64_t sub(std::int64_t A, std::int64_t B) {
  std::int64_t R;
  if (__builtin_sub_overflow(A, B, &R))
    return A >= 0 ? MaxInt : MinInt;
  return R;
}

} // namespace grt::strings
