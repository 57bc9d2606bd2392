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

// Multi-label criticality model: a character embedding mean-pooled over the
// 40 code positions of an input/output pair, followed by sigmoid dense
// layers and one sigmoid output per grammar terminal.

#ifndef GRT_NEURAL_HPP
#define GRT_NEURAL_HPP

#include "grt/core.hpp"
#include "grt/datagen.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace grt {

inline constexpr std::size_t FieldLength = 20;
inline constexpr std::size_t EncodedLength = 2 * FieldLength;
inline constexpr std::size_t VocabSize = 128;
inline constexpr std::size_t EmbeddingDim = 100;
inline constexpr std::uint8_t InputSeparator = 0x1F;

/// Codes 0-19 hold the input, 20-39 the output; 0 is padding. Bytes above
/// 127 map to 127. Several inputs are joined with InputSeparator.
using EncodedPair = std::array<std::uint8_t, EncodedLength>;

EncodedPair encode(const IoConstraint &C);

/// Geometric interpolation from \p InputSize to \p OutputSize over
/// \p NumHidden hidden layers, counting input and output among the layers:
/// size(n) = in * (out / in)^(n / (NumHidden + 3)), rounded half up.
/// Throws DegenerateShape when a size rounds below 1.
std::vector<std::size_t> hiddenLayerSizes(std::size_t InputSize,
                                          std::size_t OutputSize,
                                          std::size_t NumHidden);

/// Row-major matrix.
struct Matrix {
  std::size_t Rows = 0;
  std::size_t Cols = 0;
  std::vector<double> Data;

  Matrix() = default;
  Matrix(std::size_t R, std::size_t C) : Rows(R), Cols(C), Data(R * C, 0.0) {}
  double &at(std::size_t R, std::size_t C) { return Data[R * Cols + C]; }
  double at(std::size_t R, std::size_t C) const { return Data[R * Cols + C]; }
  bool operator==(const Matrix &) const = default;
};

/// Weights are Out x In.
struct DenseLayer {
  Matrix Weights;
  std::vector<double> Bias;
  bool operator==(const DenseLayer &) const = default;
};

struct ModelWeights {
  Matrix Embedding;
  std::vector<DenseLayer> Hidden;
  DenseLayer Output;
  /// EmbeddingDim, hidden sizes..., number of terminals.
  std::vector<std::size_t> LayerDims;
  /// Output order; not serialized (the file holds its hash).
  std::vector<std::string> Terminals;

  std::size_t numOutputs() const { return Output.Bias.size(); }

  /// Every parameter array in serialization order.
  std::vector<std::span<double>> parameters();
  std::vector<std::span<const double>> parameters() const;

  /// Throws ShapeMismatch unless every array agrees with LayerDims.
  void checkShape() const;

  bool operator==(const ModelWeights &) const = default;
};

/// Shapes for \p Terminals with zero-filled parameters.
ModelWeights zeroWeights(const std::vector<std::string> &Terminals,
                         std::size_t NumHidden = 3);
/// Uniform in +-sqrt(6 / (fan_in + fan_out)) per array, biases zero.
ModelWeights initWeights(const std::vector<std::string> &Terminals,
                         std::uint64_t Seed, std::size_t NumHidden = 3);

/// Output probabilities, one per terminal. Dropout (inverted scaling) is
/// applied after each hidden layer only when \p TrainMode is set.
std::vector<double> forward(const ModelWeights &W, const EncodedPair &X,
                            bool TrainMode = false, std::uint64_t Seed = 0,
                            double DropoutRate = 0.2);

struct Example {
  EncodedPair X;
  std::vector<std::uint8_t> Y;
};

/// Mean binary cross-entropy over the batch and all outputs. When \p Grad is
/// given it receives d(loss)/d(parameter) with the shapes of \p W. Dropout
/// runs when \p DropoutSeed is set.
double lossAndGradient(const ModelWeights &W, std::span<const Example> Batch,
                       ModelWeights *Grad,
                       std::optional<std::uint64_t> DropoutSeed = std::nullopt,
                       double DropoutRate = 0.2);

struct TrainConfig {
  std::size_t Epochs = 15;
  std::size_t BatchSize = 200;
  double LearningRate = 1e-3;
  double DropoutRate = 0.2;
  double Beta1 = 0.9;
  double Beta2 = 0.999;
  double Epsilon = 1e-8;
  std::size_t NumHidden = 3;
  std::uint64_t Seed = 0;
  std::function<void(std::size_t Epoch, double MeanLoss)> OnEpoch;

  /// Throws Error on a non-positive count or an out-of-range rate.
  void validate() const;
};

struct TrainResult {
  ModelWeights Weights;
  /// Mean training loss of each epoch.
  std::vector<double> EpochLoss;
};

/// Mini-batch Adam on mean BCE. The dataset is put in a canonical order
/// before seeded shuffling, so the result depends only on its contents.
/// Throws NonFiniteLoss when a batch loss is not finite.
TrainResult train(const std::vector<CritSample> &Samples,
                  const std::vector<std::string> &Terminals,
                  const TrainConfig &Cfg);

/// Bit i is set iff output i is at least \p Threshold.
std::vector<std::uint8_t> predictBits(const ModelWeights &W,
                                      const IoConstraint &C,
                                      double Threshold = 0.5);

/// FNV-1a over the newline-joined terminal names.
std::uint64_t terminalOrderHash(const std::vector<std::string> &Terminals);

inline constexpr std::uint32_t WeightsFormatVersion = 1;

void writeWeights(std::ostream &OS, const ModelWeights &W);
/// Throws FormatError on a malformed file or when the stored terminal hash
/// differs from that of \p Terminals.
ModelWeights readWeights(std::istream &IS,
                         const std::vector<std::string> &Terminals);
void saveWeights(const std::filesystem::path &Path, const ModelWeights &W);
ModelWeights loadWeights(const std::filesystem::path &Path,
                         const std::vector<std::string> &Terminals);

} // namespace grt

#endif // GRT_NEURAL_HPP
