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

#include "grt/sexpr.hpp"
#include "grt/errors.hpp"

#include <cctype>

namespace grt {

namespace {

class Reader {
public:
  explicit Reader(std::string_view Text) : Text(Text) {}

  std::vector<SExpr> readAll() {
    std::vector<SExpr> Out;
    skipBlanks();
    while (Pos < Text.size()) {
      Out.push_back(readOne());
      skipBlanks();
    }
    return Out;
  }

private:
  std::string_view Text;
  std::size_t Pos = 0;
  std::size_t Line = 1;
  std::size_t Col = 1;

  char peek() const { return Text[Pos]; }

  void advance() {
    if (Text[Pos] == '\n') {
      ++Line;
      Col = 1;
    } else {
      ++Col;
    }
    ++Pos;
  }

  void skipBlanks() {
    while (Pos < Text.size()) {
      char C = peek();
      if (C == ';') {
        while (Pos < Text.size() && peek() != '\n')
          advance();
      } else if (std::isspace(static_cast<unsigned char>(C))) {
        advance();
      } else {
        break;
      }
    }
  }

  static bool isDelimiter(char C) {
    return C == '(' || C == ')' || C == '"' || C == ';' ||
           std::isspace(static_cast<unsigned char>(C));
  }

  SExpr readOne() {
    SExpr E;
    E.Line = Line;
    E.Column = Col;
    char C = peek();
    if (C == '(') {
      advance();
      E.K = SExpr::Kind::List;
      for (;;) {
        skipBlanks();
        if (Pos >= Text.size())
          throw ParseError(E.Line, E.Column, "unterminated list");
        if (peek() == ')') {
          advance();
          return E;
        }
        E.Items.push_back(readOne());
      }
    }
    if (C == ')')
      throw ParseError(Line, Col, "unexpected ')'");
    if (C == '"') {
      advance();
      E.K = SExpr::Kind::String;
      for (;;) {
        if (Pos >= Text.size())
          throw ParseError(E.Line, E.Column, "unterminated string literal");
        char D = peek();
        advance();
        if (D == '"') {
          if (Pos < Text.size() && peek() == '"') {
            E.Text.push_back('"');
            advance();
            continue;
          }
          return E;
        }
        E.Text.push_back(D);
      }
    }
    bool AllDigits = true;
    while (Pos < Text.size() && !isDelimiter(peek())) {
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        AllDigits = false;
      E.Text.push_back(peek());
      advance();
    }
    E.K = AllDigits ? SExpr::Kind::Numeral : SExpr::Kind::Symbol;
    return E;
  }
};

} // namespace

std::vector<SExpr> readSExprs(std::string_view Text) {
  return Reader(Text).readAll();
}

std::string quoteString(std::string_view S) {
  std::string Out = "\"";
  for (char C : S) {
    if (C == '"')
      Out += "\"\"";
    else
      Out += C;
  }
  Out += '"';
  return Out;
}

} // namespace grt
