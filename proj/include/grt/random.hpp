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

#ifndef GRT_RANDOM_HPP
#define GRT_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace grt {

/// Seeded generator with distribution helpers that do not depend on the
/// standard library's implementation-defined distributions, so seeded runs
/// reproduce across toolchains.
class Rng {
public:
  explicit Rng(std::uint64_t Seed) : Engine(Seed) {}

  std::uint64_t next() { return Engine(); }

  /// Uniform integer in [0, Bound). Bound must be positive.
  std::uint64_t below(std::uint64_t Bound) {
    std::uint64_t Limit = UINT64_MAX - UINT64_MAX % Bound;
    std::uint64_t X;
    do
      X = Engine();
    while (X >= Limit);
    return X % Bound;
  }

  /// Uniform integer in [Lo, Hi].
  std::int64_t between(std::int64_t Lo, std::int64_t Hi) {
    return Lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(Hi - Lo) + 1));
  }

  /// Uniform double in [0, 1).
  double uniform() {
    return static_cast<double>(Engine() >> 11) * 0x1.0p-53;
  }

  template <typename T> void shuffle(std::vector<T> &V) {
    for (std::size_t I = V.size(); I > 1; --I)
      std::swap(V[I - 1], V[below(I)]);
  }

private:
  std::mt19937_64 Engine;
};

} // namespace grt

#endif // GRT_RANDOM_HPP
