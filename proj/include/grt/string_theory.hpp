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

// Total semantics of the string/integer primitives, following the SMT-LIB
// theory of strings. Strings are byte sequences. Integers are 64-bit and
// saturate at the int64 bounds instead of growing without limit.

#ifndef GRT_STRING_THEORY_HPP
#define GRT_STRING_THEORY_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace grt::strings {

void concat(std::string_view A, std::string_view B, std::string &Out);

// str.replace: first occurrence of Pat in S is replaced by With. An empty
// pattern matches at position 0.
void replace(std::string_view S, std::string_view Pat, std::string_view With,
             std::string &Out);

// str.at: the single character at I, or "" when out of range.
void at(std::string_view S, std::int64_t I, std::string &Out);

// str.substr: up to N characters starting at I; "" if I is out of range or
// N <= 0.
void substr(std::string_view S, std::int64_t I, std::int64_t N,
            std::string &Out);

std::int64_t length(std::string_view S);

// str.indexof: first match of T in S at or after I, -1 on a miss or when I
// is outside [0, |S|].
std::int64_t indexof(std::string_view S, std::string_view T, std::int64_t I);

// str.to.int: decimal value of an all-digit non-empty string, else -1.
std::int64_t toInt(std::string_view S);

// int.to.str: decimal digits for non-negative values, else "".
void fromInt(std::int64_t N, std::string &Out);

bool prefixof(std::string_view Pre, std::string_view S);
bool suffixof(std::string_view Suf, std::string_view S);
bool contains(std::string_view S, std::string_view T);

std::int64_t add(std::int64_t A, std::int64_t B);
std::int64_t sub(std::int64_t A, std::int64_t B);

} // namespace grt::strings

#endif // GRT_STRING_THEORY_HPP
