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

#ifndef GRT_ERRORS_HPP
#define GRT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grt {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class TypeError : public Error {
public:
  using Error::Error;
};

class UnknownTerminal : public Error {
public:
  explicit UnknownTerminal(const std::string &Name)
      : Error("unknown terminal '" + Name + "'"), Name(Name) {}
  std::string Name;
};

class ParseError : public Error {
public:
  ParseError(std::size_t Line, std::size_t Column, const std::string &Msg)
      : Error("<input>:" + std::to_string(Line) + ":" + std::to_string(Column) +
              ": " + Msg),
        Line(Line), Column(Column) {}
  std::size_t Line;
  std::size_t Column;
};

class GrammarExhausted : public Error {
public:
  using Error::Error;
};

// External solver failures.
class SolverCrash : public Error {
public:
  using Error::Error;
};

class UnparseableOutput : public Error {
public:
  using Error::Error;
};

class WrongAnswer : public Error {
public:
  using Error::Error;
};

// Neural model failures.
class ShapeMismatch : public Error {
public:
  using Error::Error;
};

class DegenerateShape : public Error {
public:
  using Error::Error;
};

class NonFiniteLoss : public Error {
public:
  using Error::Error;
};

// Malformed dataset, weights, or results file.
class FormatError : public Error {
public:
  using Error::Error;
};

} // namespace grt

#endif // GRT_ERRORS_HPP
