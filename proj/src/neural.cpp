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

#include "grt/neural.hpp"
#include "grt/random.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <numeric>
#include <tuple>
#include <utility>

namespace grt {

EncodedPair encode(const IoConstraint &C) {
  EncodedPair Codes{};
  auto Put = [&](std::size_t Offset, std::size_t &Pos, unsigned char Ch) {
    if (Pos < FieldLength)
      Codes[Offset + Pos++] = Ch > 127 ? 127 : Ch;
  };
  std::size_t Pos = 0;
  for (std::size_t I = 0; I < C.Inputs.size(); ++I) {
    if (I > 0)
      Put(0, Pos, InputSeparator);
    for (char Ch : C.Inputs[I])
      Put(0, Pos, static_cast<unsigned char>(Ch));
  }
  Pos = 0;
  for (char Ch : C.Output)
    Put(FieldLength, Pos, static_cast<unsigned char>(Ch));
  return Codes;
}

std::vector<std::size_t> hiddenLayerSizes(std::size_t InputSize,
                                          std::size_t OutputSize,
                                          std::size_t NumHidden) {
  if (InputSize == 0 || OutputSize == 0)
    throw DegenerateShape("layer sizes must be positive");
  double Ratio = static_cast<double>(OutputSize) / static_cast<double>(InputSize);
  double Layers = static_cast<double>(NumHidden + 3);
  std::vector<std::size_t> Sizes;
  for (std::size_t N = 1; N <= NumHidden; ++N) {
    double Exact = static_cast<double>(InputSize) *
                   std::pow(Ratio, static_cast<double>(N) / Layers);
    double Rounded = std::floor(Exact + 0.5);
    if (Rounded < 1.0)
      throw DegenerateShape("hidden layer " + std::to_string(N) +
                            " rounds to zero units");
    Sizes.push_back(static_cast<std::size_t>(Rounded));
  }
  return Sizes;
}

std::vector<std::span<double>> ModelWeights::parameters() {
  std::vector<std::span<double>> Out{Embedding.Data};
  for (DenseLayer &L : Hidden) {
    Out.emplace_back(L.Weights.Data);
    Out.emplace_back(L.Bias);
  }
  Out.emplace_back(Output.Weights.Data);
  Out.emplace_back(Output.Bias);
  return Out;
}

std::vector<std::span<const double>> ModelWeights::parameters() const {
  std::vector<std::span<const double>> Out{Embedding.Data};
  for (const DenseLayer &L : Hidden) {
    Out.emplace_back(L.Weights.Data);
    Out.emplace_back(L.Bias);
  }
  Out.emplace_back(Output.Weights.Data);
  Out.emplace_back(Output.Bias);
  return Out;
}

void ModelWeights::checkShape() const {
  auto Fail = [](const std::string &What) {
    throw ShapeMismatch("model weights: " + What);
  };
  if (LayerDims.size() != Hidden.size() + 2)
    Fail("layer_dims length does not match the layer count");
  if (LayerDims.front() != EmbeddingDim)
    Fail("first layer must have the embedding width");
  if (Embedding.Rows != VocabSize || Embedding.Cols != EmbeddingDim ||
      Embedding.Data.size() != VocabSize * EmbeddingDim)
    Fail("embedding must be 128 x 100");
  auto Check = [&](const DenseLayer &L, std::size_t In, std::size_t Out) {
    if (L.Weights.Rows != Out || L.Weights.Cols != In ||
        L.Weights.Data.size() != In * Out || L.Bias.size() != Out)
      Fail("dense layer " + std::to_string(In) + " -> " + std::to_string(Out) +
           " has the wrong shape");
  };
  for (std::size_t I = 0; I < Hidden.size(); ++I)
    Check(Hidden[I], LayerDims[I], LayerDims[I + 1]);
  Check(Output, LayerDims[LayerDims.size() - 2], LayerDims.back());
  if (!Terminals.empty() && Terminals.size() != LayerDims.back())
    Fail("terminal count does not match the output width");
}

namespace {

ModelWeights shapedWeights(std::vector<std::size_t> Dims,
                           const std::vector<std::string> &Terminals) {
  ModelWeights W;
  W.LayerDims = std::move(Dims);
  W.Terminals = Terminals;
  W.Embedding = Matrix(VocabSize, EmbeddingDim);
  for (std::size_t I = 0; I + 2 < W.LayerDims.size(); ++I)
    W.Hidden.push_back({Matrix(W.LayerDims[I + 1], W.LayerDims[I]),
                        std::vector<double>(W.LayerDims[I + 1], 0.0)});
  std::size_t Last = W.LayerDims.size() - 1;
  W.Output = {Matrix(W.LayerDims[Last], W.LayerDims[Last - 1]),
              std::vector<double>(W.LayerDims[Last], 0.0)};
  return W;
}

std::vector<std::size_t> layerDims(std::size_t Outputs, std::size_t NumHidden) {
  std::vector<std::size_t> Dims{EmbeddingDim};
  for (std::size_t S : hiddenLayerSizes(EmbeddingDim, Outputs, NumHidden))
    Dims.push_back(S);
  Dims.push_back(Outputs);
  return Dims;
}

double sigmoid(double Z) {
  if (Z >= 0)
    return 1.0 / (1.0 + std::exp(-Z));
  double E = std::exp(Z);
  return E / (1.0 + E);
}

// log(1 + exp(-|l|)) + max(l, 0) - l * y
double bceFromLogit(double L, double Y) {
  return std::max(L, 0.0) - L * Y + std::log1p(std::exp(-std::abs(L)));
}

// Forward activations of one example, kept for backpropagation.
struct Trace {
  std::vector<std::vector<double>> A; // A[0] pooled, A[i] hidden output i
  std::vector<std::vector<double>> S; // sigmoid outputs before dropout
  std::vector<std::vector<double>> Mask;
  std::vector<double> Logits;
};

void dense(const DenseLayer &L, const std::vector<double> &In,
           std::vector<double> &Out) {
  Out.assign(L.Bias.begin(), L.Bias.end());
  const std::size_t Cols = L.Weights.Cols;
  for (std::size_t R = 0; R < L.Weights.Rows; ++R) {
    const double *Row = &L.Weights.Data[R * Cols];
    double Sum = 0.0;
    for (std::size_t C = 0; C < Cols; ++C)
      Sum += Row[C] * In[C];
    Out[R] += Sum;
  }
}

void runForward(const ModelWeights &W, const EncodedPair &X, Rng *Dropout,
                double Rate, Trace &T) {
  const std::size_t NH = W.Hidden.size();
  T.A.resize(NH + 1);
  T.S.resize(NH);
  T.Mask.resize(NH);

  auto &Pooled = T.A[0];
  Pooled.assign(EmbeddingDim, 0.0);
  for (std::uint8_t Code : X) {
    const double *Row = &W.Embedding.Data[Code * EmbeddingDim];
    for (std::size_t D = 0; D < EmbeddingDim; ++D)
      Pooled[D] += Row[D];
  }
  for (double &V : Pooled)
    V /= static_cast<double>(EncodedLength);

  const double Keep = 1.0 / (1.0 - Rate);
  for (std::size_t I = 0; I < NH; ++I) {
    dense(W.Hidden[I], T.A[I], T.S[I]);
    for (double &V : T.S[I])
      V = sigmoid(V);
    T.Mask[I].assign(T.S[I].size(), 1.0);
    if (Dropout)
      for (double &M : T.Mask[I])
        M = Dropout->uniform() < Rate ? 0.0 : Keep;
    T.A[I + 1].resize(T.S[I].size());
    for (std::size_t J = 0; J < T.S[I].size(); ++J)
      T.A[I + 1][J] = T.S[I][J] * T.Mask[I][J];
  }
  dense(W.Output, T.A[NH], T.Logits);
}

void addOuter(DenseLayer &G, const std::vector<double> &Delta,
              const std::vector<double> &In) {
  const std::size_t Cols = G.Weights.Cols;
  for (std::size_t R = 0; R < Delta.size(); ++R) {
    double D = Delta[R];
    G.Bias[R] += D;
    if (D == 0.0)
      continue;
    double *Row = &G.Weights.Data[R * Cols];
    for (std::size_t C = 0; C < Cols; ++C)
      Row[C] += D * In[C];
  }
}

void backTranspose(const DenseLayer &L, const std::vector<double> &Delta,
                   std::vector<double> &Out) {
  const std::size_t Cols = L.Weights.Cols;
  Out.assign(Cols, 0.0);
  for (std::size_t R = 0; R < Delta.size(); ++R) {
    double D = Delta[R];
    if (D == 0.0)
      continue;
    const double *Row = &L.Weights.Data[R * Cols];
    for (std::size_t C = 0; C < Cols; ++C)
      Out[C] += D * Row[C];
  }
}

} // namespace

ModelWeights zeroWeights(const std::vector<std::string> &Terminals,
                         std::size_t NumHidden) {
  return shapedWeights(layerDims(Terminals.size(), NumHidden), Terminals);
}

ModelWeights initWeights(const std::vector<std::string> &Terminals,
                         std::uint64_t Seed, std::size_t NumHidden) {
  ModelWeights W = zeroWeights(Terminals, NumHidden);
  Rng R(Seed);
  auto Fill = [&](Matrix &M) {
    double Limit = std::sqrt(6.0 / static_cast<double>(M.Rows + M.Cols));
    for (double &V : M.Data)
      V = (2.0 * R.uniform() - 1.0) * Limit;
  };
  Fill(W.Embedding);
  for (DenseLayer &L : W.Hidden)
    Fill(L.Weights);
  Fill(W.Output.Weights);
  return W;
}

std::vector<double> forward(const ModelWeights &W, const EncodedPair &X,
                            bool TrainMode, std::uint64_t Seed,
                            double DropoutRate) {
  W.checkShape();
  Trace T;
  Rng R(Seed);
  runForward(W, X, TrainMode ? &R : nullptr, DropoutRate, T);
  for (double &V : T.Logits)
    V = sigmoid(V);
  return T.Logits;
}

double lossAndGradient(const ModelWeights &W, std::span<const Example> Batch,
                       ModelWeights *Grad,
                       std::optional<std::uint64_t> DropoutSeed,
                       double DropoutRate) {
  W.checkShape();
  if (Batch.empty())
    return 0.0;
  const std::size_t K = W.numOutputs();
  if (Grad) {
    *Grad = shapedWeights(W.LayerDims, W.Terminals);
  }
  std::optional<Rng> R;
  if (DropoutSeed)
    R.emplace(*DropoutSeed);
  const double Scale = 1.0 / static_cast<double>(Batch.size() * K);

  Trace T;
  std::vector<double> Delta, Up;
  double Total = 0.0;
  for (const Example &E : Batch) {
    if (E.Y.size() != K)
      throw ShapeMismatch("label length " + std::to_string(E.Y.size()) +
                          " does not match " + std::to_string(K) + " outputs");
    runForward(W, E.X, R ? &*R : nullptr, DropoutRate, T);
    Delta.resize(K);
    for (std::size_t I = 0; I < K; ++I) {
      double Y = E.Y[I] ? 1.0 : 0.0;
      Total += bceFromLogit(T.Logits[I], Y);
      Delta[I] = (sigmoid(T.Logits[I]) - Y) * Scale;
    }
    if (!Grad)
      continue;

    const std::size_t NH = W.Hidden.size();
    addOuter(Grad->Output, Delta, T.A[NH]);
    backTranspose(W.Output, Delta, Up);
    for (std::size_t I = NH; I-- > 0;) {
      Delta.resize(Up.size());
      for (std::size_t J = 0; J < Up.size(); ++J) {
        double S = T.S[I][J];
        Delta[J] = Up[J] * T.Mask[I][J] * S * (1.0 - S);
      }
      addOuter(Grad->Hidden[I], Delta, T.A[I]);
      backTranspose(W.Hidden[I], Delta, Up);
    }
    const double Pool = 1.0 / static_cast<double>(EncodedLength);
    for (std::uint8_t Code : E.X) {
      double *Row = &Grad->Embedding.Data[Code * EmbeddingDim];
      for (std::size_t D = 0; D < EmbeddingDim; ++D)
        Row[D] += Up[D] * Pool;
    }
  }
  return Total * Scale;
}

void TrainConfig::validate() const {
  if (Epochs == 0 || BatchSize == 0 || NumHidden == 0)
    throw Error("train: epochs, batch size and hidden layers must be positive");
  if (!(LearningRate > 0) || !(Epsilon > 0))
    throw Error("train: learning rate and epsilon must be positive");
  if (!(DropoutRate >= 0 && DropoutRate < 1))
    throw Error("train: dropout rate must lie in [0, 1)");
  if (!(Beta1 > 0 && Beta1 < 1) || !(Beta2 > 0 && Beta2 < 1))
    throw Error("train: Adam betas must lie in (0, 1)");
}

TrainResult train(const std::vector<CritSample> &Samples,
                  const std::vector<std::string> &Terminals,
                  const TrainConfig &Cfg) {
  Cfg.validate();
  if (Samples.empty())
    throw Error("train: empty dataset");

  std::vector<Example> Data;
  Data.reserve(Samples.size());
  for (const CritSample &S : Samples) {
    if (S.Label.size() != Terminals.size())
      throw ShapeMismatch("sample label length does not match the terminals");
    Data.push_back({encode(S.Constraint), S.Label});
  }
  std::sort(Data.begin(), Data.end(), [](const Example &A, const Example &B) {
    return std::tie(A.X, A.Y) < std::tie(B.X, B.Y);
  });

  TrainResult Result;
  ModelWeights &W = Result.Weights;
  W = initWeights(Terminals, Cfg.Seed, Cfg.NumHidden);
  Rng Order(Cfg.Seed ^ 0x9e3779b97f4a7c15ULL);
  Rng DropoutSeeds(Cfg.Seed ^ 0xd1b54a32d192ed03ULL);

  std::vector<std::vector<double>> M, V;
  for (auto P : W.parameters()) {
    M.emplace_back(P.size(), 0.0);
    V.emplace_back(P.size(), 0.0);
  }
  double Beta1Pow = 1.0, Beta2Pow = 1.0;

  std::vector<std::size_t> Index(Data.size());
  std::vector<Example> Batch;
  ModelWeights Grad;
  for (std::size_t Epoch = 0; Epoch < Cfg.Epochs; ++Epoch) {
    std::iota(Index.begin(), Index.end(), 0);
    Order.shuffle(Index);
    double EpochSum = 0.0;
    for (std::size_t Start = 0; Start < Index.size(); Start += Cfg.BatchSize) {
      std::size_t End = std::min(Index.size(), Start + Cfg.BatchSize);
      Batch.clear();
      for (std::size_t I = Start; I < End; ++I)
        Batch.push_back(Data[Index[I]]);
      std::optional<std::uint64_t> Seed;
      if (Cfg.DropoutRate > 0)
        Seed = DropoutSeeds.next();
      double Loss = lossAndGradient(W, Batch, &Grad, Seed, Cfg.DropoutRate);
      if (!std::isfinite(Loss))
        throw NonFiniteLoss("non-finite loss in epoch " +
                            std::to_string(Epoch + 1) + " at sample " +
                            std::to_string(Start));
      EpochSum += Loss * static_cast<double>(End - Start);

      Beta1Pow *= Cfg.Beta1;
      Beta2Pow *= Cfg.Beta2;
      auto Params = W.parameters();
      auto Grads = std::as_const(Grad).parameters();
      for (std::size_t P = 0; P < Params.size(); ++P) {
        auto &Mp = M[P];
        auto &Vp = V[P];
        for (std::size_t I = 0; I < Params[P].size(); ++I) {
          double G = Grads[P][I];
          Mp[I] = Cfg.Beta1 * Mp[I] + (1.0 - Cfg.Beta1) * G;
          Vp[I] = Cfg.Beta2 * Vp[I] + (1.0 - Cfg.Beta2) * G * G;
          double MHat = Mp[I] / (1.0 - Beta1Pow);
          double VHat = Vp[I] / (1.0 - Beta2Pow);
          Params[P][I] -= Cfg.LearningRate * MHat / (std::sqrt(VHat) + Cfg.Epsilon);
        }
      }
    }
    double Mean = EpochSum / static_cast<double>(Data.size());
    Result.EpochLoss.push_back(Mean);
    if (Cfg.OnEpoch)
      Cfg.OnEpoch(Epoch + 1, Mean);
  }
  return Result;
}

std::vector<std::uint8_t> predictBits(const ModelWeights &W,
                                      const IoConstraint &C,
                                      double Threshold) {
  std::vector<double> P = forward(W, encode(C));
  std::vector<std::uint8_t> Bits(P.size());
  for (std::size_t I = 0; I < P.size(); ++I)
    Bits[I] = P[I] >= Threshold ? 1 : 0;
  return Bits;
}

std::uint64_t terminalOrderHash(const std::vector<std::string> &Terminals) {
  std::uint64_t H = 0xcbf29ce484222325ULL;
  auto Mix = [&](unsigned char C) {
    H ^= C;
    H *= 0x100000001b3ULL;
  };
  for (std::size_t I = 0; I < Terminals.size(); ++I) {
    if (I > 0)
      Mix('\n');
    for (char C : Terminals[I])
      Mix(static_cast<unsigned char>(C));
  }
  return H;
}

namespace {

constexpr char Magic[4] = {'G', 'R', 'T', 'W'};

template <typename T> void putLE(std::ostream &OS, T V) {
  unsigned char Bytes[sizeof(T)];
  for (std::size_t I = 0; I < sizeof(T); ++I)
    Bytes[I] = static_cast<unsigned char>(V >> (8 * I));
  OS.write(reinterpret_cast<const char *>(Bytes), sizeof(T));
}

template <typename T> T getLE(std::istream &IS) {
  unsigned char Bytes[sizeof(T)];
  if (!IS.read(reinterpret_cast<char *>(Bytes), sizeof(T)))
    throw FormatError("weights file is truncated");
  T V = 0;
  for (std::size_t I = 0; I < sizeof(T); ++I)
    V |= static_cast<T>(Bytes[I]) << (8 * I);
  return V;
}

} // namespace

void writeWeights(std::ostream &OS, const ModelWeights &W) {
  W.checkShape();
  OS.write(Magic, 4);
  putLE<std::uint32_t>(OS, WeightsFormatVersion);
  putLE<std::uint32_t>(OS, static_cast<std::uint32_t>(W.numOutputs()));
  putLE<std::uint64_t>(OS, terminalOrderHash(W.Terminals));
  putLE<std::uint32_t>(OS, static_cast<std::uint32_t>(W.LayerDims.size()));
  for (std::size_t D : W.LayerDims)
    putLE<std::uint32_t>(OS, static_cast<std::uint32_t>(D));
  for (auto P : W.parameters())
    for (double V : P)
      putLE<std::uint64_t>(OS, std::bit_cast<std::uint64_t>(V));
  if (!OS)
    throw FormatError("cannot write weights");
}

ModelWeights readWeights(std::istream &IS,
                         const std::vector<std::string> &Terminals) {
  char Head[4];
  if (!IS.read(Head, 4) || std::memcmp(Head, Magic, 4) != 0)
    throw FormatError("not a weights file");
  if (getLE<std::uint32_t>(IS) != WeightsFormatVersion)
    throw FormatError("unsupported weights format version");
  std::uint32_t NumTerms = getLE<std::uint32_t>(IS);
  std::uint64_t Hash = getLE<std::uint64_t>(IS);
  if (NumTerms != Terminals.size() || Hash != terminalOrderHash(Terminals))
    throw FormatError("weights were trained for a different terminal ordering");
  std::uint32_t NumDims = getLE<std::uint32_t>(IS);
  if (NumDims < 2 || NumDims > 64)
    throw FormatError("implausible layer count in weights file");
  std::vector<std::size_t> Dims;
  for (std::uint32_t I = 0; I < NumDims; ++I) {
    std::uint32_t D = getLE<std::uint32_t>(IS);
    if (D == 0 || D > (1u << 20))
      throw FormatError("implausible layer width in weights file");
    Dims.push_back(D);
  }
  if (Dims.front() != EmbeddingDim || Dims.back() != NumTerms)
    throw FormatError("layer dimensions do not match the model");
  ModelWeights W = shapedWeights(std::move(Dims), Terminals);
  for (auto P : W.parameters())
    for (double &V : P)
      V = std::bit_cast<double>(getLE<std::uint64_t>(IS));
  if (IS.peek() != std::char_traits<char>::eof())
    throw FormatError("trailing bytes in weights file");
  for (auto P : std::as_const(W).parameters())
    for (double V : P)
      if (!std::isfinite(V))
        throw FormatError("non-finite value in weights file");
  return W;
}

void saveWeights(const std::filesystem::path &Path, const ModelWeights &W) {
  std::ofstream OS(Path, std::ios::binary);
  if (!OS)
    throw FormatError("cannot open " + Path.string() + " for writing");
  writeWeights(OS, W);
}

ModelWeights loadWeights(const std::filesystem::path &Path,
                         const std::vector<std::string> &Terminals) {
  std::ifstream IS(Path, std::ios::binary);
  if (!IS)
    throw FormatError("cannot open " + Path.string());
  return readWeights(IS, Terminals);
}

} // namespace grt
