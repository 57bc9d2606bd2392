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

#ifndef GRT_SEXPR_HPP
#define GRT_SEXPR_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace grt {

/// An SMT-LIB style s-expression with its source position (1-based).
struct SExpr {
  enum class Kind { Symbol, String, Numeral, List };

  Kind K = Kind::List;
  std::string Text; // symbol name, decoded string literal, or digits
  std::vector<SExpr> Items;
  std::size_t Line = 1;
  std::size_t Column = 1;

  bool isSymbol(std::string_view S) const {
    return K == Kind::Symbol && Text == S;
  }
  bool isList() const { return K == Kind::List; }
  /// True for a list whose first element is the symbol \p Head.
  bool isCall(std::string_view Head) const {
    return K == Kind::List && !Items.empty() && Items[0].isSymbol(Head);
  }
};

/// Reads every top-level s-expression in \p Text. ';' starts a line comment;
/// string literals use "" to escape a quote. Throws ParseError.
std::vector<SExpr> readSExprs(std::string_view Text);

/// Encodes \p S as an SMT-LIB string literal.
std::string quoteString(std::string_view S);

} // namespace grt

#endif // GRT_SEXPR_HPP
